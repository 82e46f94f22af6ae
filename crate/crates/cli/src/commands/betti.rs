use ttda::homology::{betti, SimplicialComplex};

use crate::{BettiArgs, CliError};

pub fn run(args: &BettiArgs) -> Result<i32, CliError> {
    let text = std::fs::read_to_string(&args.complex)?;
    let mut maximal: Vec<Vec<usize>> = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let vertices: Vec<usize> = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>().map_err(|_| {
                    CliError::validation(format!(
                        "{}: line {}: {tok:?} is not a vertex id",
                        args.complex.display(),
                        lineno + 1
                    ))
                })
            })
            .collect::<Result<_, _>>()?;
        maximal.push(vertices);
    }
    if maximal.is_empty() {
        return Err(CliError::validation(format!(
            "{}: no simplices found",
            args.complex.display()
        )));
    }
    let complex = SimplicialComplex::from_maximal(maximal).map_err(|e| CliError {
        code: 2,
        message: e.to_string(),
    })?;
    println!(
        "beta_0={} beta_1={} beta_2={}",
        betti(&complex, 0).map_err(CliError::from)?,
        betti(&complex, 1).map_err(CliError::from)?,
        betti(&complex, 2).map_err(CliError::from)?
    );
    Ok(0)
}
