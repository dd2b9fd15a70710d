//! 3-coloring an odd cycle whose vertices hang off a hub triangle.

use fractional_coloring::aux::{classify_intervals, hub_split_three_color, HubSplitInstance};

fn main() {
    for attachment in [vec![1, 2, 3, 1, 2], vec![1, 1, 2, 2, 1, 2, 2], vec![2, 2, 2, 3, 3]] {
        let inst = HubSplitInstance::new(attachment.len() / 2, attachment.clone()).unwrap();
        let colors = hub_split_three_color(&inst);
        let len = inst.cycle_len();
        println!("attachment {attachment:?}");
        if let Ok(intervals) = classify_intervals(&inst) {
            for iv in intervals {
                println!("  interval {}..{} pattern {:?} type {:?}", iv.u, iv.v, iv.pattern, iv.kind);
            }
        }
        println!("  cycle colors {:?}, hubs {:?}", &colors[..len], &colors[len..]);
    }
}
