//! Rebuilds every named code and checks its parameters, the Hermitian LCD
//! property and, where one is claimed, its weight enumerator.

use std::time::Instant;

fn main() -> lcd4::Result<()> {
    println!(
        "{:<6} {:>12} {:>5} {:>11} {:>6}",
        "code", "params", "lcd", "enumerator", ""
    );
    let mut failures = 0;
    for name in lcd4::catalog::names() {
        let start = Instant::now();
        let r = lcd4::catalog::verify(name)?;
        let we = match r.enumerator_ok {
            Some(true) => "match",
            Some(false) => "MISMATCH",
            None => "-",
        };
        failures += usize::from(!r.pass);
        println!(
            "{:<6} {:>12} {:>5} {:>11} {:>6}  ({:.0?})",
            r.name,
            format!("[{},{},{}]", r.n, r.k, r.d),
            r.lcd,
            we,
            if r.pass { "ok" } else { "FAIL" },
            start.elapsed()
        );
    }
    println!("{failures} failure(s)");
    Ok(())
}
