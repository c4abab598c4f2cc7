fn main() {
    std::process::exit(seqdesign::cli::run(std::env::args_os()));
}
