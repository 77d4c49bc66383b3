use netctl::sweep::{aggregate, read_records, write_records, MeanSd};
use netctl::{ModelFamily, SweepMethod, TerminationReason};

const SAMPLE: &str = include_str!("data/sweep_sample.csv");

fn close(a: Option<f64>, b: f64) -> bool {
    a.is_some_and(|a| (a - b).abs() < 1e-12)
}

#[test]
fn sample_round_trips_byte_for_byte() {
    let records = read_records(SAMPLE.as_bytes()).unwrap();
    assert_eq!(records.len(), 4);
    assert_eq!(records[3].termination_reason, Some(TerminationReason::NoProgress));
    assert_eq!(records[0].gamma, None);
    assert!(!records[2].h.is_defined());
    let mut out = Vec::new();
    write_records(&records, &mut out).unwrap();
    assert_eq!(String::from_utf8(out).unwrap(), SAMPLE);
}

#[test]
fn reference_aggregation() {
    // Values worked out by hand from the sample file.
    let groups = aggregate(&read_records(SAMPLE.as_bytes()).unwrap());
    assert_eq!(groups.len(), 2);

    let er = &groups[0];
    assert_eq!((er.model, er.n, er.k_target, er.gamma, er.method), (ModelFamily::ErdosRenyi, 10, 2.0, None, SweepMethod::Original));
    assert_eq!(er.count, 3);
    assert!(close(er.n_d.mean, 0.4) && close(er.n_d.sd, 0.1));
    assert!(close(er.n_driver.mean, 4.0) && close(er.n_driver.sd, 1.0));
    assert!(close(er.r_in_out.mean, 0.1) && close(er.r_in_out.sd, 0.2));
    assert_eq!(er.h.count, 2);
    assert!(close(er.h.mean, 0.3) && close(er.h.sd, 0.02f64.sqrt()));
    assert_eq!(er.r_out_in, MeanSd { count: 0, mean: None, sd: None });
    assert!(close(er.r_in_in.mean, 0.5) && close(er.r_in_in.sd, 0.0));

    let sf = &groups[1];
    assert_eq!((sf.model, sf.gamma, sf.method, sf.count), (ModelFamily::ScaleFree, Some(3.0), SweepMethod::Regular, 1));
    assert!(close(sf.n_d.mean, 0.1));
    assert_eq!(sf.n_d.sd, None);
}

#[test]
fn rejects_bad_rows() {
    let bad_header = SAMPLE.replacen("model", "family", 1);
    assert!(read_records(bad_header.as_bytes()).is_err());
    let bad_value = SAMPLE.replacen("ER,10,2,2,,original,1", "ER,ten,2,2,,original,1", 1);
    let err = read_records(bad_value.as_bytes()).unwrap_err();
    assert!(err.to_string().starts_with("line 3"), "{err}");
}
