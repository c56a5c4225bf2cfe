use std::io::Write;

fn main() {
    let result = ddb_sphere::cli::run(std::env::args_os());
    // A closed pipe (e.g. `| head`) is not an error worth reporting.
    let _ = if result.exit_code == 0 {
        writeln!(std::io::stdout(), "{}", result.payload)
    } else {
        writeln!(std::io::stderr(), "{}", result.payload)
    };
    std::process::exit(result.exit_code);
}
