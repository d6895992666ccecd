use pyo3::ffi::c_str;
use pyo3::prelude::*;

use achromatic::achromatic as achromatic_module;

#[test]
fn module_round_trip() {
    pyo3::append_to_inittab!(achromatic_module);
    Python::attach(|py| {
        py.run(
            c_str!(
                r#"
import achromatic as a

c = a.build_coloring(3)
assert (c.n, c.k) == (13, 14), c
assert c.verify().is_valid
back = a.Coloring.from_json(c.to_json())
assert back.classes == c.classes
assert c.to_dot().count(" -- ") == 78

bad = a.Coloring(3, [[(0, 1)], [(0, 2)], [(1, 2)]])
report = bad.verify()
assert not report and len(report.pair_failures) == 3

plane = a.ProjectivePlane(3)
assert plane.size == 13 and len(plane.line_points(0)) == 4
p = plane.line_intersection(0, 1)
assert plane.incident(p, 0) and plane.incident(p, 1)

assert a.upper_bound(12) == 22
assert a.bounds(13) == (14, 26, None)
assert a.star_extend(c, 15).k == 16
assert a.greedy_extend(c, 15).is_valid()

assert a.exists_coloring(4, 4) is None
assert a.exists_coloring(4, 3).k == 3
r = a.exact_value(5)
assert (r.status, r.value) == ("exact", 4)
r = a.exact_value(8, max_nodes=1000)
assert (r.status, r.lower, r.upper, r.value) == ("bracket", 8, 11, None)
try:
    a.exists_coloring(7, 8, max_nodes=10)
    raise AssertionError("expected a timeout")
except TimeoutError:
    pass
try:
    a.build_coloring(4)
    raise AssertionError("expected ValueError")
except ValueError:
    pass
"#
            ),
            None,
            None,
        )
        .inspect_err(|e| {
            e.print(py);
        })
        .unwrap();
    });
}
