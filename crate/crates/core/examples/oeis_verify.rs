// Writes a sequence as a b-file, parses it back and verifies it, then shows
// how a corrupted entry is reported.

use trinomial::cli::{cmd_gen, parse_bfile, verify_entries, OutputFormat};
use trinomial::sequences::SeqSpec;

pub fn run() -> Result<(), Box<dyn std::error::Error>> {
    let spec = SeqSpec::motzkin();
    let generated = cmd_gen(&spec, 0..=20, OutputFormat::Bfile);
    if !generated.success() {
        return Err(generated.stderr.into());
    }
    let mut entries = parse_bfile(&generated.stdout)?;
    let verified = verify_entries(&entries, &spec, 0);
    print!("{}", verified.stdout);
    if !verified.success() {
        return Err(verified.stderr.into());
    }

    entries[7].value += 1;
    let broken = verify_entries(&entries, &spec, 0);
    print!("exit {}: {}", broken.code, broken.stderr);

    let err = parse_bfile("0 1\n1 1\n2 x2\n").unwrap_err();
    println!("parse error: {err}");
    Ok(())
}

fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
