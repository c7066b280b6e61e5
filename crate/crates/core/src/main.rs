use clap::Parser;
use stirling::cli::{run, Cli, EXIT_USAGE};

fn main() {
    let cli = Cli::parse();
    if let Ok(raw) = std::env::var("STIRLING_THREADS") {
        match raw.parse::<usize>() {
            Ok(n) => {
                // Only fails if a global pool already exists, which it cannot here.
                let _ = rayon::ThreadPoolBuilder::new().num_threads(n).build_global();
            }
            Err(_) => {
                eprintln!("error: STIRLING_THREADS must be a non-negative integer, got {raw:?}");
                std::process::exit(EXIT_USAGE);
            }
        }
    }
    let code = run(&cli, &mut std::io::stdout().lock(), &mut std::io::stderr().lock());
    std::process::exit(code);
}
