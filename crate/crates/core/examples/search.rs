//! Quadratic substitution search with an interrupted and resumed checkpoint.

use superirred::cli::render_report;
use superirred::parse::parse_polynomial;
use superirred::search::{resume, run, SearchJob, SearchOptions};
use superirred::Result;

fn main() -> Result<()> {
    let f = parse_polynomial("x^4 + x^2 + 2*x + 3")?;
    let job = SearchJob::rational(&f, 3, 2)?;
    let dir = std::env::temp_dir().join(format!("superirred-search-{}", std::process::id()));
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("run.jsonl");

    let partial = run(&job, &SearchOptions { checkpoint: Some(path.clone()), max_slices: Some(4), ..Default::default() })?;
    println!("stopped after {} of {} slices", partial.checkpoint, partial.slices_total);

    let done = resume(&path, &job, &SearchOptions { checkpoint: Some(path.clone()), ..Default::default() })?;
    print!("{}", render_report(&done));
    assert!(done.exhausted && done.found());

    let fresh = run(&job, &SearchOptions::default())?;
    assert_eq!(serde_json::to_string(&fresh)?, serde_json::to_string(&done)?);
    std::fs::remove_dir_all(&dir)?;
    Ok(())
}
