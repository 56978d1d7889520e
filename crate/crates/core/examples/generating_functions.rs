// Expands generating functions as exact truncated series and reads the
// sequences back off their coefficients.

use trinomial::exact::{rat, rat_from_int};
use trinomial::genfun::{assoc_egf, ctc_egf, hkdf_egf, pi_ogf};
use trinomial::hybrid::{hkdf, hybrid_pi};
use trinomial::sequences::{ctc, motzkin};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let order = 40;

    let c = ctc_egf(order)?.egf_terms();
    let m = assoc_egf(1, &rat(1, 1), &rat(1, 1), order)?.egf_terms();
    for n in 0..order {
        if c[n] != rat_from_int(ctc(n)) || m[n] != rat_from_int(motzkin(n)) {
            return Err(format!("egf coefficient mismatch at n = {n}").into());
        }
    }
    println!("exp(t) I_0(2t)    -> {:?}", c[..8].iter().map(ToString::to_string).collect::<Vec<_>>());
    println!("exp(t) I_1(2t)/t  -> {:?}", m[..8].iter().map(ToString::to_string).collect::<Vec<_>>());

    let (x, y) = (rat(-2, 3), rat(5, 7));
    let h = hkdf_egf(&x, &y, order)?.egf_terms();
    let pi = pi_ogf(&x, &y, order)?;
    for (n, h_n) in h.iter().enumerate() {
        if *h_n != hkdf(n, &x, &y) || *pi.coeff(n)? != hybrid_pi(n, &x, &y) {
            return Err(format!("series mismatch at n = {n}").into());
        }
    }
    println!("H_10(-2/3, 5/7)  = {}", h[10]);
    println!("Pi_10(-2/3, 5/7) = {}", pi.coeff(10)?);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
