use surreval::seed::task_rng;
use surreval::stats::five_number_summary;
use surreval::trialgen::*;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let horizon: usize = args.get(1).and_then(|s| s.parse().ok()).unwrap_or(1500);
    let floor: f64 = args.get(2).and_then(|s| s.parse().ok()).unwrap_or(0.1);
    let prev: Vec<f64> = args.get(3).map(|s| s.split(',').map(|x| x.parse().unwrap()).collect())
        .unwrap_or(vec![0.45, 0.40, 0.35, 0.30]);
    let alpha: f64 = args.get(4).and_then(|s| s.parse().ok()).unwrap_or(0.01);
    let fut_n: usize = args.get(5).and_then(|s| s.parse().ok()).unwrap_or(30);
    let stop_min: usize = args.get(6).and_then(|s| s.parse().ok()).unwrap_or(4);
    let fut_t: f64 = args.get(7).and_then(|s| s.parse().ok()).unwrap_or(0.1);
    let mut fives = [0.0; 5];
    let mut fails = 0;
    let reps = 100;
    for rep in 0..reps {
        let mut cfg = ScenarioConfig::<f64>::new(Scenario::Linear, 0.0, 0.0, rep);
        cfg.marker_prevalences = prev.clone();
        let tcfg = TrialConfig { horizon, weight_floor: floor, stop_alpha_benefit: alpha, futility_min_n: fut_n, stop_min_n: stop_min, futility_t_threshold: fut_t, ..TrialConfig::default() };
        let mut rng = task_rng(1000 + rep, &[1]);
        let truth = generate_group_effects(&cfg, &mut rng);
        match simulate_trial(&truth, &tcfg, &cfg, &mut rng) {
            Ok(out) => {
                let sizes: Vec<f64> = group_sizes(&out.subjects, &cfg).iter().map(|&n| n as f64).collect();
                let f = five_number_summary(&sizes);
                for i in 0..5 { fives[i] += f[i] / reps as f64; }
            }
            Err(e) => { fails += 1; if fails < 3 { eprintln!("rep {rep}: {e}"); } }
        }
    }
    println!("horizon={horizon} floor={floor} prev={prev:?} alpha={alpha} futn={fut_n} -> avg five-number: {:.1} {:.1} {:.1} {:.1} {:.1}  fails={fails}", fives[0], fives[1], fives[2], fives[3], fives[4]);
    println!("target: 6 10 13 20 115 (+-30%: 4.2-7.8, 7-13, 9.1-16.9, 14-26, 80.5-149.5)");
}
