use std::io;

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let status = noncrossing_cli::run(
        &args,
        &mut io::stdin(),
        &mut io::stdout(),
        &mut io::stderr(),
    );
    std::process::exit(status);
}
