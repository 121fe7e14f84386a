use serde::Serialize;

/// Full periods that must repeat after the first one before a period is
/// reported.
pub const DEFAULT_MIN_CONFIRM: usize = 2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PeriodStatus {
    Confirmed,
    NotFound,
}

/// Eventual periodicity of a finite prefix of a sequence.
///
/// When `status` is `Confirmed`, `seq[i] == seq[i - period]` for every
/// `preperiod + period <= i <= confirmed_through`. When `NotFound`, `period`
/// is 0 and the other fields are meaningless.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeriodicityReport {
    pub preperiod: usize,
    pub period: usize,
    pub confirmed_through: usize,
    pub status: PeriodStatus,
}

impl PeriodicityReport {
    fn not_found() -> Self {
        Self {
            preperiod: 0,
            period: 0,
            confirmed_through: 0,
            status: PeriodStatus::NotFound,
        }
    }

    pub fn is_confirmed(&self) -> bool {
        self.status == PeriodStatus::Confirmed
    }

    /// Re-checks the claim by direct index comparison.
    pub fn holds_for<T: PartialEq>(&self, seq: &[T]) -> bool {
        if !self.is_confirmed() || self.confirmed_through >= seq.len() {
            return false;
        }
        (self.preperiod + self.period..=self.confirmed_through)
            .all(|i| seq[i] == seq[i - self.period])
    }
}

/// Smallest period `p` (then smallest preperiod for it) such that the tail
/// starting at the preperiod is `p`-periodic, the preperiod does not exceed
/// `max_preperiod`, and the tail holds at least `min_confirm` full
/// repetitions after its first period.
pub fn detect_period<T: PartialEq>(
    seq: &[T],
    max_preperiod: usize,
    min_confirm: usize,
) -> PeriodicityReport {
    let len = seq.len();
    for period in 1..=len / (min_confirm + 1).max(1) {
        // Last index whose value breaks the period, if any.
        let last_break = (period..len).rev().find(|&i| seq[i] != seq[i - period]);
        let preperiod = last_break.map_or(0, |i| i + 1 - period);
        if preperiod > max_preperiod {
            continue;
        }
        let full_periods = (len - preperiod) / period;
        if full_periods > min_confirm {
            return PeriodicityReport {
                preperiod,
                period,
                confirmed_through: len - 1,
                status: PeriodStatus::Confirmed,
            };
        }
    }
    PeriodicityReport::not_found()
}
