import inspect
from unittest.mock import patch

from main import app
from src.services.errors import InconsistentResult


def test_read_root(client):
    response = client.get('/')
    assert response.status_code == 200, response.text
    assert response.json()['message'] == 'Welcome to bhzeta!'


def test_healthchecker(client):
    response = client.get('/api/healthchecker')
    assert response.status_code == 200, response.text
    assert response.json()['message'] == 'bhzeta is ready, chain weights (16,12,12;60)'


def test_analyze(client, chain345):
    response = client.post('/api/polynomials/analyze', json=chain345)
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['weights'] == {'w': [16, 12, 12], 'd': 60, 'c': 4}
    assert data['decomposition']['shape'] == 'chain'
    assert data['transpose'] == 'x1^3 + x1*x2^4 + x2*x3^5'
    assert data['milnor'] == 44
    assert data['reduced_zeta'] == [[1, -1], [5, -3], [15, 4]]
    assert data['geometric_root_zeta'] == [[1, -1], [5, 1], [20, -1], [60, 1]]
    assert len(data['root_actions']) == 4
    assert data['orbit'] is None


def test_analyze_matrix(client):
    response = client.post('/api/polynomials/analyze', json={'matrix': [[5, 1, 0], [0, 2, 0], [0, 0, 3]]})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['polynomial'] == 'x1^5*x2 + x2^2 + x3^3'
    assert data['weights'] == {'w': [3, 15, 10], 'd': 30, 'c': 1}
    assert data['orbit'] is not None


def test_analyze_syntax_error(client):
    response = client.post('/api/polynomials/analyze', json={'polynomial': 'x1^3 + $x2'})
    assert response.status_code == 422, response.text
    assert 'position 7' in response.json()['detail']


def test_analyze_needs_one_input(client):
    response = client.post('/api/polynomials/analyze', json={})
    assert response.status_code == 422, response.text


def test_transpose(client, mixed_example):
    response = client.post('/api/polynomials/transpose', json=mixed_example)
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['transpose'] == 'x1^5 + x1*x2^2 + x3^3'
    assert data['weights_T'] == {'w': [6, 12, 10], 'd': 30, 'c': 2}


def test_zeta(client, chain345):
    response = client.post('/api/polynomials/zeta', json=chain345)
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['zeta'] == [[5, -3], [15, 4]]
    assert set(data['paths']) == {'oracle', 'chain'}


def test_roots(client, chain345):
    response = client.post('/api/polynomials/roots', json={**chain345, 'k': 4})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['root_exists'] is True
    assert [action['m'] for action in data['root_actions']] == [[0, 1, 1], [1, 2, 1], [2, 3, 1], [3, 0, 1]]
    assert len(data['geometric_root_zetas']) == 3


def test_roots_missing(client, chain345):
    response = client.post('/api/polynomials/roots', json={**chain345, 'k': 3})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['root_exists'] is False
    assert data['roots'] == []
    assert data['root_actions'] == []


def test_dual(client, chain345):
    response = client.post('/api/polynomials/dual', json=chain345)
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['degree'] == 60
    assert data['dual'] == [[4, -4], [12, 3], [60, 1]]


def test_dual_non_divisor(client, chain345):
    response = client.post('/api/polynomials/dual', json={**chain345, 'degree': 7})
    assert response.status_code == 422, response.text
    assert 'does not divide 7' in response.json()['detail']


def test_inconsistent_result_is_structured(client, chain345):
    with patch('src.services.duality.root_summary', side_effect=InconsistentResult('solver engines disagree for k = 4')):
        response = client.post('/api/polynomials/roots', json=chain345)
    assert response.status_code == 500, response.text
    assert response.json()['detail'] == 'solver engines disagree for k = 4'


def test_handlers_run_in_threadpool():
    endpoints = [route.endpoint for route in app.routes if route.path.startswith(('/api/polynomials', '/api/theorems'))]
    assert len(endpoints) == 10
    assert not any(inspect.iscoroutinefunction(endpoint) for endpoint in endpoints)
