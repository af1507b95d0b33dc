use std::process::ExitCode;

fn main() -> ExitCode {
    let report = teissier_core::cli::run(std::env::args_os());
    let text = report.rendered();
    if report.exit_code == teissier_core::cli::EXIT_OK || report.json {
        println!("{text}");
    } else {
        eprintln!("{text}");
    }
    ExitCode::from(report.exit_code as u8)
}
