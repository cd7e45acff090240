// Average several time-shifted copies of a movement with DBA.

use dance_sync::align::{dba, dtw_distance, DbaConfig, TimeSeries};

pub fn run_example() -> dance_sync::Result<TimeSeries> {
    let gesture = |shift: usize| {
        let v = (0..40)
            .map(|t| {
                let t = t as f64 - shift as f64;
                90.0 + 60.0 * (-(t - 15.0).powi(2) / 20.0).exp()
            })
            .collect();
        TimeSeries::new(v)
    };
    let inputs = [gesture(0)?, gesture(2)?, gesture(5)?, gesture(3)?];

    let bary = dba(&inputs, &DbaConfig::default())?;
    println!("iterations: {}", bary.iterations);
    println!("objective trace: {:?}", bary.objective_trace);
    for (k, s) in inputs.iter().enumerate() {
        println!("  input {k}: distance to barycenter {:.3}", dtw_distance(&bary.series, s));
    }
    Ok(bary.series)
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
