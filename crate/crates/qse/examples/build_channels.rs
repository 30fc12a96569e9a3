//! Building quantum channels: standard families, seeded random channels,
//! CPTP validation, and the JSON file format.
//!
//! Run with: cargo run --example build_channels

use qse::{random_channel, standard_channel, ChannelKind, DensityOperator};

fn main() -> qse::Result<()> {
    // Standard families.
    let depolarizing = standard_channel(ChannelKind::Depolarizing { d: 2, p: 0.5 })?;
    let damping = standard_channel(ChannelKind::AmplitudeDamping { gamma: 0.3 })?;
    let pinching = qse::channel::computational_pinching(3)?;
    for chan in [&depolarizing, &damping, &pinching] {
        let choi = chan.to_choi()?;
        let report = choi.validate()?;
        println!(
            "{}: {} Kraus operators, choi rank {}, min eigenvalue {:+.3e}, tp deviation {:.3e}, cptp pass: {}",
            chan.label(),
            chan.len(),
            choi.rank(),
            report.min_eigenvalue,
            report.tp_deviation,
            report.pass
        );
    }

    // Seeded random channels have exactly the requested Kraus rank.
    for rank in [1, 2, 4] {
        let chan = random_channel(2, rank, 42)?;
        println!("random d=2 rank={rank}: choi rank {}", chan.to_choi()?.rank());
    }

    // Channel action: the fully depolarizing channel erases any input.
    let rho = qse::random_density(2, 7)?;
    let erased = standard_channel(ChannelKind::Depolarizing { d: 2, p: 1.0 })?.apply(&rho)?;
    println!(
        "\nfully depolarizing output purity: {:.12} (maximally mixed: {:.12})",
        erased.purity(),
        DensityOperator::maximally_mixed(2).purity()
    );

    // Files round-trip losslessly.
    let dir = std::env::temp_dir();
    let path = dir.join("qse_example_channel.json");
    qse::io::save_kraus(&path, &depolarizing)?;
    let loaded = qse::io::load_object(&path)?.into_kraus()?;
    println!("\nwrote and reloaded '{}' from {}", loaded.label(), path.display());
    std::fs::remove_file(&path).ok();
    Ok(())
}
