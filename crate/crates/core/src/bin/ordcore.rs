use std::process::ExitCode;

fn main() -> ExitCode {
    let report = ordcore::cli::run(std::env::args_os());
    if report.code == 2 {
        eprint!("{}", report.text);
    } else {
        print!("{}", report.text);
    }
    ExitCode::from(report.code as u8)
}
