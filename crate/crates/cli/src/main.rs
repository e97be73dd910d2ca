use std::process::ExitCode;

fn main() -> ExitCode {
    polycat::run()
}
