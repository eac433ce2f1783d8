fn main() { std::process::exit(superirred::cli::main()); }
