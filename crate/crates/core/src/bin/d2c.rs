use std::io;

fn main() {
    let code = d2c::cli::run(std::env::args_os(), &mut io::stdin(), &mut io::stdout(), &mut io::stderr());
    std::process::exit(code);
}
