// Checks the identity catalogue and shows a known-bad variant failing.

use trinomial::sequences::{check_identity, Identity};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for identity in Identity::standard_suite() {
        let hi = if identity.uses_series() { 60 } else { 120 };
        let report = check_identity(identity, 0..=hi);
        println!("{report}");
        if !report.passed() {
            return Err(format!("{identity} failed").into());
        }
    }

    let printed: Identity = "EQ43_PRINTED(m=2,p=0)".parse()?;
    let report = check_identity(printed, 0..=5);
    println!("{report}");
    match report.failures.first() {
        Some(first) => println!("first disagreement at n = {}: {} vs {}", first.index, first.left, first.right),
        None => return Err("EQ43_PRINTED unexpectedly holds".into()),
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
