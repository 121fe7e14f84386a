fn main() -> std::process::ExitCode {
    impartial::cli::main()
}
