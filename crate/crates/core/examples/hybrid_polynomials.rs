// Hermite, Laguerre and hybrid polynomials at exact points, with their
// three-term recurrences.

use trinomial::exact::{rat, rat_from_int, QuadElem};
use trinomial::hybrid::{
    hermite_reductions, hkdf, hybrid_pi, hybrid_pi_assoc, laguerre2, laguerre2_binomial, recurrence_step,
    recurrence_step_unscaled, RecurrenceFamily,
};
use trinomial::sequences::{ctc, motzkin};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let (he, h) = hermite_reductions(4, &rat(1, 2));
    println!("He_4(1/2) = {he}, H_4(1/2) = {h}");

    let (x, y) = (rat(3, 2), rat(-1, 3));
    for n in 0..=15 {
        if laguerre2(n, &x, &y) != laguerre2_binomial(n, &x, &y) {
            return Err(format!("Laguerre forms differ at n = {n}").into());
        }
    }
    println!("L_6(3/2, -1/3) = {}", laguerre2(6, &x, &y));

    let one = rat(1, 1);
    for n in 0..=20 {
        if hybrid_pi(n, &one, &one) != rat_from_int(ctc(n)) || hybrid_pi_assoc(n, 1, &one, &one) != rat_from_int(motzkin(n)) {
            return Err(format!("Pi at (1, 1) mismatch at n = {n}").into());
        }
    }

    for family in [RecurrenceFamily::Hkdf, RecurrenceFamily::Pi] {
        for n in 1..=15 {
            if recurrence_step(family, n, &x, &y)? != family.direct(n + 1, &x, &y) {
                return Err(format!("{family:?} recurrence fails at n = {n}").into());
            }
        }
        let off = recurrence_step_unscaled(family, 3, &x, &y)?;
        println!("{family:?}: recurrence holds; without the leading factor n = 3 gives {off} vs {}", family.direct(4, &x, &y));
    }

    // The same code runs over Q(sqrt(-3)).
    let w = QuadElem::omega((-3).into());
    let two = QuadElem::from_rat(rat(2, 1), (-3).into());
    println!("H_5(w, 2) = {}", hkdf(5, &w, &two));
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
