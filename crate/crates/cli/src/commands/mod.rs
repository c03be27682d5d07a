pub mod batch;
pub mod compare;
pub mod entropy;
pub mod generate;
pub mod profile;
pub mod window;

use std::time::Instant;

/// Per-stage wall-clock reporting. Timings go to stderr so output files
/// stay byte-identical across runs.
pub struct StageTimer {
    start: Instant,
    stages: Vec<(&'static str, f64)>,
}

impl StageTimer {
    pub fn new() -> Self {
        StageTimer { start: Instant::now(), stages: Vec::new() }
    }

    /// Closes the current stage under `name` and starts the next one.
    pub fn stage(&mut self, name: &'static str) {
        self.stages.push((name, self.start.elapsed().as_secs_f64()));
        self.start = Instant::now();
    }

    pub fn report(&self) {
        let mut line = String::from("# timing:");
        for (name, secs) in &self.stages {
            line.push_str(&format!(" {name}={secs:.3}s"));
        }
        eprintln!("{line}");
    }
}
