//! Entanglement-assisted quantum codes from Hermitian LCD codes: an LCD
//! `[n, k, d]₄` code gives an `[[n, k, d; n-k]]₂` code.

use lcd4::catalog;

fn main() -> lcd4::Result<()> {
    for name in catalog::names() {
        let code = catalog::build(name)?;
        let q = code.eaqecc_params()?;
        println!(
            "{name:<6} {:<12} -> {q:<18} corrects {} error(s)",
            code.params().to_string(),
            q.correctable_errors()
        );
    }
    Ok(())
}
