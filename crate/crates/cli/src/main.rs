use clap::Parser;

fn main() {
    let cli = polygram::app::Cli::parse();
    let stdout = std::io::stdout();
    let code = polygram::app::run(&cli, &mut stdout.lock());
    std::process::exit(code);
}
