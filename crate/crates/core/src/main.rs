fn main() {
    std::process::exit(tvf::cli::main_exit());
}
