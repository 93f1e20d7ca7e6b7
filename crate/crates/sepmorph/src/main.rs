use std::process::exit;

fn main() {
    let code = sepmorph::cli::run(
        std::env::args(),
        &mut std::io::stdout().lock(),
        &mut std::io::stderr().lock(),
    );
    exit(code);
}
