use wha_core::builders::*;
use wha_core::Error;

#[test]
fn tables_validate() {
    let s3 = GroupTable::symmetric(3);
    s3.validate().unwrap();
    assert_eq!(s3.order(), 6);
    let sizes: Vec<usize> = s3.conjugacy_classes().iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 3, 2]);
    GroupoidTable::indiscrete(2).validate().unwrap();
    GroupoidTable::discrete(2).validate().unwrap();
    let mut broken = GroupTable::cyclic(3);
    broken.inverse[1] = 1;
    assert!(matches!(broken.validate(), Err(Error::InvalidTable(_))));
}
