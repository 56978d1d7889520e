// Evaluates the hybrid polynomials through Legendre polynomials, in the
// rationals when the discriminant is a square and in `Q(sqrt(d))` otherwise.

use trinomial::exact::{rat, QuadElem};
use trinomial::hybrid::{ctc_via_legendre, hybrid_pi, pi_via_legendre, pi_via_legendre_quad, pi_via_legendre_with_root};
use trinomial::sequences::ctc;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    // c_n = w^n P_n(-w/3) with w = i sqrt(3).
    for n in 0..=50 {
        if ctc_via_legendre(n)? != ctc(n) {
            return Err(format!("central trinomial mismatch at n = {n}").into());
        }
    }
    println!("c_50 = {}", ctc_via_legendre(50)?);

    let w = QuadElem::omega((-3).into());
    println!("w = {w}, w^2 = {}", w.pow(2));

    // y^2 - 4x = 25 - 16 = 9: a rational root, and both signs agree.
    let (x, y) = (rat(4, 1), rat(5, 1));
    for n in 0..=20 {
        let direct = hybrid_pi(n, &x, &y);
        let plus = pi_via_legendre_with_root(n, &x, &y, &rat(3, 1))?;
        let minus = pi_via_legendre_with_root(n, &x, &y, &rat(-3, 1))?;
        if plus != direct || minus != direct || pi_via_legendre(n, &x, &y)? != direct {
            return Err(format!("rational bridge mismatch at n = {n}").into());
        }
    }

    // y^2 - 4x = 1/4 - 8 is not a square; the radical cancels in Q(sqrt(d)).
    let (x, y) = (rat(2, 1), rat(1, 2));
    for n in 0..=20 {
        if pi_via_legendre_quad(n, &x, &y)? != hybrid_pi(n, &x, &y) {
            return Err(format!("quadratic bridge mismatch at n = {n}").into());
        }
    }
    println!("Pi_20(2, 1/2) = {}", hybrid_pi(20, &x, &y));
    println!("rational root needed: {}", pi_via_legendre(3, &x, &y).unwrap_err());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
