use std::ffi::{c_char, CString};
use std::ptr;

use partition_lab_ffi::*;

fn last_error() -> String {
    let mut buf = vec![0 as c_char; 256];
    let n = unsafe { pl_last_error_message(buf.as_mut_ptr(), buf.len()) };
    let bytes: Vec<u8> = buf[..n.min(255)].iter().map(|&c| c as u8).collect();
    String::from_utf8(bytes).unwrap()
}

fn matrix(json: &str) -> *mut PlMatrix {
    let text = CString::new(json).unwrap();
    let mut m = ptr::null_mut();
    assert_eq!(unsafe { pl_matrix_from_json(text.as_ptr(), &mut m) }, PlStatus::Ok);
    m
}

#[test]
fn partition_count() {
    let mut p = 0;
    assert_eq!(unsafe { pl_count_partitions(40, &mut p) }, PlStatus::Ok);
    assert_eq!(p, 37338);
    assert_eq!(unsafe { pl_count_partitions(417, &mut p) }, PlStatus::Overflow);
    assert!(last_error().contains("overflow"));
    assert_eq!(unsafe { pl_count_partitions(5, ptr::null_mut()) }, PlStatus::NullPointer);
}

#[test]
fn matrix_round_trip_and_weights() {
    let parts = [2u64, 2, 1, 1];
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(pl_matrix_from_partition(parts.as_ptr(), parts.len(), &mut m), PlStatus::Ok);
        assert_eq!(pl_matrix_columns(m), 4);

        let (mut top, mut bottom, mut len) = ([0u64; 4], [0u64; 4], 0usize);
        assert_eq!(
            pl_matrix_rows(m, top.as_mut_ptr(), bottom.as_mut_ptr(), 4, &mut len),
            PlStatus::Ok
        );
        assert_eq!((top, bottom, len), ([2, 1, 1, 0], [0, 1, 0, 1], 4));

        let mut ell = 0;
        assert_eq!(pl_matrix_ell(m, &mut ell), PlStatus::Ok);
        assert_eq!(ell, 6);

        // size query, then fill
        let mut hooks = [0u64; 4];
        assert_eq!(pl_matrix_hooks(m, ptr::null_mut(), 0, &mut len), PlStatus::BufferTooSmall);
        assert_eq!(len, 4);
        assert_eq!(pl_matrix_hooks(m, hooks.as_mut_ptr(), 4, &mut len), PlStatus::Ok);
        assert_eq!(hooks, [11, 9, 5, 3]);

        let mut w = 0;
        assert_eq!(pl_matrix_weight(m, &mut w), PlStatus::Ok);
        assert_eq!(w, 28);

        let mut back = [0u64; 8];
        assert_eq!(pl_matrix_to_partition(m, back.as_mut_ptr(), 8, &mut len), PlStatus::Ok);
        assert_eq!(&back[..len], &parts);
        pl_matrix_free(m);
    }
}

#[test]
fn invalid_matrices_are_rejected() {
    let top = [1u64, 0];
    let bottom = [1u64, 0];
    let mut m = ptr::null_mut();
    let status = unsafe { pl_matrix_new(top.as_ptr(), bottom.as_ptr(), 2, &mut m) };
    assert_eq!(status, PlStatus::InvalidMatrix);
    assert!(m.is_null());
    assert!(last_error().contains("d_s must be non-zero"));

    let text = CString::new("{\"top\":[3,1,0],\"bottom\":[0,1,1]}").unwrap();
    let status = unsafe { pl_matrix_from_json(text.as_ptr(), &mut m) };
    assert_eq!(status, PlStatus::InvalidMatrix);

    let parts = [5u64];
    let status = unsafe { pl_matrix_project_to_m0(parts.as_ptr(), 1, &mut m) };
    assert_eq!(status, PlStatus::InvalidArgument);
    unsafe { pl_matrix_free(ptr::null_mut()) };
}

#[test]
fn projection_lands_in_m0() {
    let parts = [4u64, 1, 1];
    let mut m = ptr::null_mut();
    unsafe {
        assert_eq!(pl_matrix_project_to_m0(parts.as_ptr(), 3, &mut m), PlStatus::Ok);
        let (mut top, mut bottom, mut len) = ([0u64; 3], [0u64; 3], 0);
        pl_matrix_rows(m, top.as_mut_ptr(), bottom.as_mut_ptr(), 3, &mut len);
        assert_eq!((top, bottom), ([1, 1, 0], [0, 0, 1]));
        pl_matrix_free(m);
    }
}

#[test]
fn table_two_weights_via_json() {
    let rows = [
        ("{\"top\":[1,1,1,1,0],\"bottom\":[0,0,0,0,1]}", 24),
        ("{\"top\":[2,0],\"bottom\":[1,2]}", 12),
        ("{\"top\":[0],\"bottom\":[5]}", 0),
    ];
    for (json, want) in rows {
        let m = matrix(json);
        let mut w = u64::MAX;
        assert_eq!(unsafe { pl_matrix_weight(m, &mut w) }, PlStatus::Ok);
        assert_eq!(w, want);
        unsafe { pl_matrix_free(m) };
    }
}

#[test]
fn frequencies_and_solutions() {
    let mut f = 0;
    unsafe {
        assert_eq!(pl_frequency(72, &mut f), PlStatus::Ok);
        assert_eq!(f, 2);
        assert_eq!(pl_b_count(72, 9, &mut f), PlStatus::Ok);
        assert_eq!(f, 1);

        let mut s = ptr::null_mut();
        assert_eq!(pl_solutions_new(72, 0, &mut s), PlStatus::Ok);
        assert_eq!(pl_solutions_len(s), 2);
        let (mut a, mut b, mut len) = (0, 0, 0);
        let mut tuple = [0u64; 6];
        assert_eq!(
            pl_solutions_get(s, 1, &mut a, &mut b, tuple.as_mut_ptr(), 6, &mut len),
            PlStatus::Ok
        );
        assert_eq!((a, b, tuple), (18, 6, [3, 3, 0, 0, 0, 0]));
        assert_eq!(
            pl_solutions_get(s, 2, &mut a, &mut b, tuple.as_mut_ptr(), 6, &mut len),
            PlStatus::InvalidArgument
        );
        pl_solutions_free(s);

        assert_eq!(pl_solutions_new(72, 9, &mut s), PlStatus::Ok);
        assert_eq!(pl_solutions_len(s), 1);
        pl_solutions_free(s);
    }
}

#[test]
fn verify_identity() {
    let (mut lhs, mut rhs) = (0, 0);
    for n in 1..=25 {
        assert_eq!(unsafe { pl_verify(n, &mut lhs, &mut rhs) }, PlStatus::Ok);
        assert_eq!(lhs, rhs);
    }
    assert_eq!(unsafe { pl_verify(0, &mut lhs, &mut rhs) }, PlStatus::InvalidArgument);
}
