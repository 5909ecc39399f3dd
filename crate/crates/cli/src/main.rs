fn main() {
    std::process::exit(pathlist_cli::run(std::env::args_os()) as i32);
}
