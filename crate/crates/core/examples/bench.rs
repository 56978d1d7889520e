// Times direct summation, streaming and brute-force oracles after
// confirming they agree, and shows a wrong method being refused.

use trinomial::cli::{cmd_bench, render_bench, BenchMethod, BenchMethodKind, CliConfig, OutputFormat};
use trinomial::exact::rat;
use trinomial::sequences::{stream, SeqSpec};

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let all = [BenchMethodKind::DirectSum, BenchMethodKind::Recurrence, BenchMethodKind::Oracle];
    let config = CliConfig::default();
    for spec in [SeqSpec::ctc(), SeqSpec::motzkin(), SeqSpec::generalized_d(3)?] {
        let out = cmd_bench(&spec, 30, &all, &config);
        if !out.success() {
            return Err(out.stderr.into());
        }
        print!("{}", out.stdout);
    }

    let csv = CliConfig { format: OutputFormat::Csv, ..CliConfig::default() };
    print!("{}", cmd_bench(&SeqSpec::assoc(2), 200, &all[..2], &csv).stdout);

    let spec = SeqSpec::ctc();
    let methods = [
        BenchMethod::new("recurrence", move |n| stream(&spec, n + 1)),
        BenchMethod::new("off_by_one", move |n| Ok((0..=n).map(|k| spec.term(k) + rat(i64::from(k == 9), 1)).collect())),
    ];
    let refused = render_bench("CTC", 20, &methods, OutputFormat::Plain);
    if refused.success() {
        return Err("a disagreeing method was timed".into());
    }
    print!("exit {}: {}", refused.code, refused.stderr);
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
