//! Prints the ASCII and SVG drawings of `delta(x)` for a permutation `x`.

use noncrossing::render::{render_ascii, render_svg};
use noncrossing::text::parse_permutation;

fn main() {
    let arg = std::env::args().nth(1).unwrap_or_else(|| "46731528".into());
    let x = parse_permutation(&arg).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(2)
    });
    let d = noncrossing::delta(&x);
    print!("{}", render_ascii(&d));
    if std::env::args().any(|a| a == "--svg") {
        print!("{}", render_svg(&d));
    }
}
