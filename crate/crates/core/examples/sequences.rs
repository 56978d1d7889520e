// Streams every sequence family and cross-checks against direct sums.

use trinomial::sequences::{stream, SeqSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let specs = [
        SeqSpec::ctc(),
        SeqSpec::motzkin(),
        SeqSpec::trinomial_col(-2),
        SeqSpec::assoc(2),
        SeqSpec::m_order(3, 1)?,
        SeqSpec::generalized_d(3)?,
    ];
    for spec in &specs {
        let terms = stream(spec, 12)?;
        for (n, value) in terms.iter().enumerate() {
            if *value != spec.term(n) {
                return Err(format!("{spec}: stream and direct sum differ at n = {n}").into());
            }
        }
        let shown: Vec<String> = terms.iter().map(ToString::to_string).collect();
        println!("{:<28} {}", spec.to_string(), shown.join(", "));
    }

    // Streaming is linear in the number of terms.
    let long = stream(&SeqSpec::ctc(), 1001)?;
    println!("c_1000 has {} digits", long[1000].numer().to_string().len());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
