use std::io;

fn main() {
    let stdout = io::stdout();
    let stderr = io::stderr();
    let code = fullcycle::cli::main_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock());
    std::process::exit(code);
}
