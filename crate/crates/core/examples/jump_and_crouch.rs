// Height synchrony for jumps and crouches, and how a late jumper or a
// shallow crouch lowers it.

use dance_sync::synchrony::{crouch_synchrony, jump_synchrony};
use dance_sync::synth::{generate, jump_window, perturb_time, SynthConfig, Template};

pub fn run_example() -> dance_sync::Result<(f64, f64)> {
    let jump = generate(&SynthConfig::new(Template::Jump))?;
    let ids: Vec<&str> = jump.performer_ids().collect();
    let (head, foot) = jump_synchrony(&jump, &ids)?;
    println!("together: head {:.2}%, foot {:.2}%", head.synchrony_percent, foot.synchrony_percent);

    let (_, duration) = jump_window(jump.frame_count());
    let late = perturb_time(&jump, "p2", 0.25 * duration)?;
    let (late_head, late_foot) = jump_synchrony(&late, &ids)?;
    println!(
        "p2 late:  head {:.2}%, foot {:.2}%",
        late_head.synchrony_percent, late_foot.synchrony_percent
    );

    let mut down = generate(&SynthConfig::new(Template::Squat))?;
    let together = crouch_synchrony(&down, &ids)?.synchrony_percent;
    let shallow = generate(&SynthConfig {
        amplitude_scale_range: (0.5, 0.5),
        ..SynthConfig::new(Template::Squat)
    })?;
    down.set_performer("p4", shallow.frames("p4")?.to_vec())?;
    let mixed = crouch_synchrony(&down, &ids)?.synchrony_percent;
    println!("crouch: together {together:.2}%, p4 at half depth {mixed:.2}%");
    Ok((late_head.synchrony_percent, mixed))
}

fn main() -> dance_sync::Result<()> {
    run_example().map(drop)
}
