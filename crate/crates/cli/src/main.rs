fn main() {
    std::process::exit(scatbench::cli::main());
}
