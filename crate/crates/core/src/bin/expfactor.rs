fn main() {
    std::process::exit(expfactor::cli::main_entry());
}
