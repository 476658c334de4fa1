use std::io;

use minsep::cli::{run_args, Io};

fn main() {
    let (stdin, stdout, stderr) = (io::stdin(), io::stdout(), io::stderr());
    let code = run_args(
        std::env::args_os(),
        &mut Io {
            stdin: &mut stdin.lock(),
            stdout: &mut stdout.lock(),
            stderr: &mut stderr.lock(),
        },
    );
    std::process::exit(code);
}
