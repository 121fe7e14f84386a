//! Single-pile and number-set games: Chocolate Stones, Demon Money,
//! Sum-from-Product and No-Factor.

pub mod chocolate;
pub mod demon;
pub mod nofactor;
pub mod sfp;

pub use chocolate::{chocolate_outcome_closed, chocolate_value, ChocolatePosition};
pub use demon::{demon_move_count, demon_outcome_closed, DemonPosition};
pub use nofactor::{
    bertrand_prime, nofactor_outcome, nofactor_outcome_closed, NoFactorPosition, NOFACTOR_MAX_BOARD,
};
pub use sfp::{sfp_classify_range, SfpMove, SfpPosition};
