// Terminating 2F0 representation of the two-variable Hermite polynomials,
// including the involution counts and their weighted variant.

use trinomial::exact::{rat, rat_from_int};
use trinomial::hybrid::{hkdf, hkdf_via_2f0};

const INVOLUTIONS: [i64; 8] = [1, 1, 2, 4, 10, 26, 76, 232];
const WEIGHTED: [i64; 7] = [1, 1, 5, 13, 73, 281, 1741];

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let one = rat(1, 1);
    for (n, &want) in INVOLUTIONS.iter().enumerate() {
        let got = hkdf_via_2f0(n, &one, &rat(1, 2))?;
        if got != rat(want, 1) {
            return Err(format!("H_{n}(1, 1/2) = {got}, expected {want}").into());
        }
    }
    for (n, &want) in WEIGHTED.iter().enumerate() {
        let got = hkdf_via_2f0(n, &rat(1, 2), &rat(1, 2))? * rat(1 << n, 1);
        if got != rat(want, 1) || got != hkdf(n, &one, &rat(2, 1)) {
            return Err(format!("2^{n} H_{n}(1/2, 1/2) = {got}, expected {want}").into());
        }
    }
    println!("H_n(1, 1/2): {INVOLUTIONS:?}");
    println!("2^n H_n(1/2, 1/2) = H_n(1, 2): {WEIGHTED:?}");

    let (x, y) = (rat(3, 5), rat(-7, 4));
    for n in 0..=30 {
        if hkdf_via_2f0(n, &x, &y)? != hkdf(n, &x, &y) {
            return Err(format!("2F0 form disagrees at n = {n}").into());
        }
    }
    println!("H_30(3/5, -7/4) = {}", hkdf(30, &x, &y));
    println!("x = 0: {}", hkdf_via_2f0(4, &rat_from_int(0.into()), &y).unwrap_err());
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
