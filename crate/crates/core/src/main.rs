fn main() -> std::process::ExitCode {
    framoid::cli::run()
}
