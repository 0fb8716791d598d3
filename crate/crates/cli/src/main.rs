use std::io::{self, Write};
use std::process::ExitCode;

fn main() -> ExitCode {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let mut out = io::BufWriter::new(stdout.lock());
    let mut err = stderr.lock();
    let code = laplace2sq::run(std::env::args_os(), &mut out, &mut err);
    if out.flush().is_err() {
        return ExitCode::from(1);
    }
    ExitCode::from(code as u8)
}
