use env_logger::Env;

fn main() {
    env_logger::Builder::from_env(Env::new().filter_or("CDT_LOG", "error"))
        .target(env_logger::Target::Stderr)
        .init();
    let code = cdt::cli::dispatch(std::env::args_os(), &mut std::io::stdout().lock());
    std::process::exit(code);
}
