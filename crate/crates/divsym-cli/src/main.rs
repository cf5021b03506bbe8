use std::io::Write;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let mut stdout = Vec::new();
    let mut stderr = Vec::new();
    let code = divsym_cli::run(&args, &mut stdout, &mut stderr);
    std::io::stdout().write_all(&stdout).ok();
    std::io::stderr().write_all(&stderr).ok();
    std::process::exit(code);
}
