"""
Tests for the fullab command line
"""

import json

import pandas as pd
import pytest

from app import main
from constructions import bipyramid
from formats import read_planar_code, read_spirals, write_planar_code


@pytest.fixture
def c60_file(tmp_path, c60):
    path = tmp_path / 'c60.pc'
    write_planar_code([c60], path)
    return str(path)


def test_make_dodecahedron(tmp_path):
    out = tmp_path / 'c20.pc'
    assert main(['make', 'dodeca', '--out', str(out)]) == 0
    (g,) = read_planar_code(out)
    assert g.n == 20


def test_make_nanotube_as_spiral(tmp_path):
    out = tmp_path / 'tube.spiral'
    assert main(['make', 'nanotube50', '--r', '1', '--format', 'spiral', '--out', str(out)]) == 0
    (pv,) = read_spirals(out)
    assert pv.n == 30


def test_make_gsw_free_default(tmp_path):
    out = tmp_path / 'c92.pc'
    assert main(['make', 'gswfree', '--out', str(out)]) == 0
    assert read_planar_code(out)[0].n == 92


def test_make_seed_for_forbidden_n():
    assert main(['make', 'seed', '--n', '22']) == 2


def test_enumerate(tmp_path):
    out = tmp_path / 'C28.spiral'
    assert main(['enumerate', '--n', '28', '--out', str(out)]) == 0
    lines = out.read_text().splitlines()
    assert len(lines) == 2
    assert all(line.startswith('28 ') for line in lines)


def test_enumeration_budget_exit_code():
    assert main(['enumerate', '--n', '30', '--budget', '100']) == 3


def test_missing_input_file(tmp_path):
    assert main(['character', '--in', str(tmp_path / 'missing.pc')]) == 4


def test_missing_input_argument():
    assert main(['character']) == 2


def test_character_json(tmp_path, c60_file):
    out = tmp_path / 'ch.json'
    assert main(['character', '--in', c60_file, '--out', str(out)]) == 0
    (row,) = json.loads(out.read_text())
    assert len(row['eigenvalues']) == 32
    assert row['alpha'] == 0.5


def test_sweep_and_hist(tmp_path):
    csv = tmp_path / 'C28.csv'
    assert main(['sweep', '--n', '28', '--csv', str(csv), '--db-dir', str(tmp_path / 'db')]) == 0
    df = pd.read_csv(csv)
    assert list(df.columns) == ['n', 'j', 'character', 'normalized']
    assert list(df['j']) == [1, 2]

    hist = tmp_path / 'hist.csv'
    assert main(['hist', '--csv', str(csv), '--bins', '4', '--out', str(hist)]) == 0
    table = pd.read_csv(hist)
    assert len(table) == 4
    assert table['count'].sum() == 2


def test_gsw_find(tmp_path, c60_file):
    out = tmp_path / 'paths.json'
    assert main(['gsw', 'find', '--in', c60_file, '--w-max', '2', '--out', str(out)]) == 0
    (entry,) = json.loads(out.read_text())
    assert entry['paths']
    assert all(p['w'] == 2 for p in entry['paths'])
    assert len(entry['classic_sites']) == 30


def test_gsw_check_and_apply(tmp_path, c60_file):
    found = tmp_path / 'paths.json'
    main(['gsw', 'find', '--in', c60_file, '--w-max', '2', '--out', str(found)])
    vertices = json.loads(found.read_text())[0]['paths'][0]['vertices']
    path = ','.join(str(v) for v in vertices)

    report = tmp_path / 'check.json'
    assert main(['gsw', 'check', '--in', c60_file, '--path', path, '--out', str(report)]) == 0
    assert json.loads(report.read_text())['valid'] is True

    out = tmp_path / 'flipped.pc'
    assert main(['gsw', 'apply', '--in', c60_file, '--path', path, '--out', str(out)]) == 0
    assert read_planar_code(out)[0].n == 60

    assert main(['gsw', 'check', '--in', c60_file, '--path', '0,1,2']) == 2


def test_psw_flip(tmp_path):
    source = tmp_path / 'bipyramid.pc'
    g = bipyramid(12)
    write_planar_code([g], source)
    u, v = g.edges()[0]
    out = tmp_path / 'flipped.pc'
    assert main(['psw', 'flip', '--in', str(source), '--edge', f'{u},{v}', '--out', str(out)]) == 0
    (flipped,) = read_planar_code(out, strict=False)
    assert not flipped.has_edge(u, v)
    assert flipped.edge_count == g.edge_count


def test_cutpartition_json(tmp_path):
    source = tmp_path / 'c92.pc'
    main(['make', 'gswfree', '--t', '2', '--out', str(source)])
    out = tmp_path / 'cut.json'
    assert main(['cutpartition', '--in', str(source), '--report', 'json',
                 '--convention', 'ROWS', '--out', str(out)]) == 0
    (report,) = json.loads(out.read_text())
    assert [c['name'] for c in report['components']] == ['TRUNCATED(4,(1,1,1))'] * 4


def test_conjecture2_table(tmp_path):
    source = tmp_path / 'c92.pc'
    main(['make', 'gswfree', '--out', str(source)])
    csv = tmp_path / 'conj.csv'
    assert main(['conjecture2', '--in', str(source), '--convention', 'ROWS', '--csv', str(csv)]) == 0
    df = pd.read_csv(csv)
    assert list(df['verdict']) == ['consistent']
    assert not df['has_gsw'][0]


def test_db_build_and_lookup(tmp_path):
    db_dir = str(tmp_path / 'db')
    out = tmp_path / 'build.json'
    assert main(['db', 'build', '--n', '28', '--db-dir', db_dir, '--out', str(out)]) == 0
    assert json.loads(out.read_text())['isomers'] == 2

    line = (tmp_path / 'db' / 'C28.spiral').read_text().splitlines()[1]
    found = tmp_path / 'lookup.json'
    assert main(['db', 'lookup', '--vector', line, '--db-dir', db_dir, '--out', str(found)]) == 0
    assert json.loads(found.read_text()) == {'n': 28, 'j': 2}

    assert main(['db', 'get', '--db-dir', db_dir]) == 2
    assert main(['db', 'get', '--n', '28', '--j', '3', '--db-dir', db_dir]) == 2


def test_sample_spiral_report(tmp_path):
    report = tmp_path / 'report.json'
    assert main(['sample', 'spiral', '--n', '20', '--count', '2', '--seed', '5',
                 '--uniformity', '--report', str(report)]) == 0
    data = json.loads(report.read_text())
    assert data['accepted'] == 2
    assert data['attempted'] == 2
    assert data['p_value'] == 1.0
