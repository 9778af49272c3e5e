use std::io::Write;

fn main() {
    let out = tcluster_cli::run(std::env::args_os());
    // a closed pipe is not worth a panic
    if !out.stdout.is_empty() {
        let _ = writeln!(std::io::stdout(), "{}", out.stdout);
    }
    if !out.stderr.is_empty() {
        let _ = writeln!(std::io::stderr(), "{}", out.stderr);
    }
    std::process::exit(out.code);
}
