//! Exhaustive cross-checks of every characterization, with and without an
//! injected recognizer fault.
//!
//!     cargo run --release --example verify_theorems -- 6

use stable_koszul::report::{verify_theorems, Fault, VerifyOptions};

fn main() -> stable_koszul::Result<()> {
    let n = std::env::args().nth(1).and_then(|s| s.parse().ok()).unwrap_or(5);
    let honest = verify_theorems(n, VerifyOptions::default())?;
    print!("{honest}");

    let faulty = verify_theorems(
        n.min(4),
        VerifyOptions {
            fault: Some(Fault::FlipC4P4Free),
            ..VerifyOptions::default()
        },
    )?;
    println!();
    print!("{faulty}");
    Ok(())
}
