fn main() {
    std::process::exit(prep_atlas::run(std::env::args_os()));
}
