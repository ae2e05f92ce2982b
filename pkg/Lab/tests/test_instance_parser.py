import pytest

from exceptions import ArgumentError, InstanceParseError, IntegrityError
from problems.instance_parser import dump_instance, load_instance, parse_instance
from problems.problem_service import make_ising
from schemas.problem import Direction, Family, TopologyKind

MAXCUT_TEXT = """\
# Max-Cut 4 nœuds cyclique
family=maxcut
topology=cyclic
n=4
optimum=4
"""


def test_parse_minimal_maxcut():
    instance = parse_instance(MAXCUT_TEXT)
    assert instance.family == Family.MAXCUT
    assert instance.topology.kind == TopologyKind.CYCLIC
    assert instance.couplings == (1.0, 1.0, 1.0, 1.0)
    assert instance.direction == Direction.MAXIMIZE
    assert instance.declared_optimum == 4


def test_parse_edge_overrides():
    text = "family=maxcut\ntopology=linear\nn=3\nj=2.0\nj_edges=2,1,0.5\n"
    instance = parse_instance(text)
    assert instance.couplings == (2.0, 0.5)


def test_parse_ising_fields():
    text = "family=ising\ntopology=linear\nn=3\nh=0.5, 0.5, 0.5\noptimum=-3.5\n"
    instance = parse_instance(text)
    assert instance.fields == (0.5, 0.5, 0.5)
    assert instance.direction == Direction.MINIMIZE


@pytest.mark.parametrize("text, line_number", [
    ("family=maxcut\ntopology=linear\nn=3\ncolour=blue\n", 4),
    ("family=maxcut\ntopology=linear\nn=3\nj=abc\n", 4),
    ("family=maxcut\ntopology=ring\nn=3\n", 2),
    ("family=maxcut\ntopology=linear\nn=1\n", 3),
    ("family=maxcut\nthis line is broken\n", 2),
    ("family=maxcut\ntopology=linear\nn=3\nj_edges=0,2,1.0\n", 4),
    ("family=maxcut\ntopology=linear\nn=3\nh=0.5,0.5,0.5\n", 4),
    ("family=ising\ntopology=linear\nn=3\nh=0.5,0.5\n", 4),
])
def test_parse_errors_name_their_line(text, line_number):
    with pytest.raises(InstanceParseError) as excinfo:
        parse_instance(text)
    assert excinfo.value.line_number == line_number
    assert f"ligne {line_number}" in str(excinfo.value)


def test_ising_without_fields():
    with pytest.raises(InstanceParseError):
        parse_instance("family=ising\ntopology=linear\nn=3\n")


def test_wrong_declared_optimum():
    with pytest.raises(IntegrityError):
        parse_instance("family=maxcut\ntopology=linear\nn=3\noptimum=3\n")
    # Sans vérification, l'optimum déclaré est conservé tel quel
    assert parse_instance("family=maxcut\ntopology=linear\nn=3\noptimum=3\n", verify=False).declared_optimum == 3


def test_dump_then_parse_preserves_instance():
    instance = make_ising("cyclic", 4, fields=[0.5, 0.5, 0.5, 0.4], couplings=[1.0, 0.5, 1.0, 1.0],
                          name="ism-4-custom", declared_optimum=-5.4)
    assert parse_instance(dump_instance(instance)) == instance


def test_load_instance_names_from_file_stem(tmp_path):
    path = tmp_path / "my-ring.txt"
    path.write_text(MAXCUT_TEXT, encoding="utf-8")
    assert load_instance(str(path)).label == "my-ring"


def test_load_instance_prefixes_path_in_errors(tmp_path):
    path = tmp_path / "broken.txt"
    path.write_text("family=maxcut\ntopology=linear\nn=x\n", encoding="utf-8")
    with pytest.raises(InstanceParseError) as excinfo:
        load_instance(str(path))
    assert str(path) in str(excinfo.value)
    assert "ligne 3" in str(excinfo.value)


def test_load_missing_file(tmp_path):
    with pytest.raises(ArgumentError):
        load_instance(str(tmp_path / "absent.txt"))
