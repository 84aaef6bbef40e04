fn main() { std::process::exit(augmental::cli::run()); }
