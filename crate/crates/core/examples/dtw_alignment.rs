// Align two short joint-angle traces with DTW and print the warping path.

use dance_sync::align::{dtw, dtw_brute_force, TimeSeries};

pub fn run_example() -> dance_sync::Result<f64> {
    let leader = TimeSeries::new(vec![10.0, 40.0, 90.0, 120.0, 90.0, 40.0])?;
    // Same gesture, one frame late and slightly smaller.
    let follower = TimeSeries::new(vec![10.0, 10.0, 35.0, 85.0, 115.0, 88.0])?;

    let result = dtw(&leader, &follower, true);
    println!("DTW distance: {:.3}", result.distance);
    println!("warping path (leader, follower):");
    for (i, j) in &result.path {
        println!("  {i} -> {j}");
    }

    // Exhaustive search over every path agrees on tiny inputs.
    let exhaustive = dtw_brute_force(&leader, &follower)?;
    println!("exhaustive search: {exhaustive:.3}");
    assert!((exhaustive - result.distance).abs() < 1e-9);

    let matrix = result.matrix.expect("matrix was requested");
    println!("cost matrix is {}x{}", matrix.rows(), matrix.cols());
    Ok(result.distance)
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
