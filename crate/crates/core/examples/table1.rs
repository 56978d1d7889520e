// Recomputes the reference table of `c_n^0`, `c_n^1` and `6 c_n^2`.

use trinomial::cli::{cmd_table1, TABLE1};
use trinomial::exact::rat;
use trinomial::sequences::assoc_ctc;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    for (n, row) in TABLE1.iter().enumerate() {
        let computed = [assoc_ctc(n, 0), assoc_ctc(n, 1), assoc_ctc(n, 2) * rat(6, 1)];
        for (value, expected) in computed.iter().zip(row) {
            if *value != rat(*expected, 1) {
                return Err(format!("n = {n}: expected {expected}, computed {value}").into());
            }
        }
    }
    let report = cmd_table1();
    print!("{}", report.stdout);
    if !report.success() {
        return Err(report.stderr.into());
    }
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
