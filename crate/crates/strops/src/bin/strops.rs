use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut out = std::io::stdout().lock();
    let code = strops::cli::run(&args, &mut out);
    let _ = out.flush();
    std::process::exit(code);
}
