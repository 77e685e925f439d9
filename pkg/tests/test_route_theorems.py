def test_theorem1(client, chain345):
    response = client.post('/api/theorems/theorem1', json=chain345)
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['holds'] is True
    assert data['c'] == 4
    assert data['c_T'] == 10
    assert data['root_fT'] == [[1, -1], [3, 1], [12, -1], [60, 1]]


def test_theorem1_wrong_shape(client):
    response = client.post('/api/theorems/theorem1', json={'polynomial': 'x1^2 + x2^3 + x3^5'})
    assert response.status_code == 409, response.text
    assert 'neither a chain nor a loop' in response.json()['detail']


def test_theorem2(client, mixed_example):
    response = client.post('/api/theorems/theorem2', json=mixed_example)
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['holds'] is True
    assert data['case'] == 'chain2+fermat'
    assert data['witness_source'] == 'geometric'


def test_theorem2_e6_tilde(client):
    response = client.post('/api/theorems/theorem2', json={'polynomial': 'x1^2*x2 + x2^3 + x3^3'})
    assert response.status_code == 200, response.text
    assert response.json()['exceptional_flags'] == ['c: p1 = 2, p2 = p3 odd', 'E6~']


def test_theorem2_two_variables(client):
    response = client.post('/api/theorems/theorem2', json={'polynomial': 'x1^2*x2 + x2^3'})
    assert response.status_code == 409, response.text


def test_remark2(client):
    response = client.post('/api/theorems/remark2', json={'polynomial': 'x1^2*x2 + x2^3'})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['holds'] is True
    assert data['geometric_root_f'] is True


def test_reduced(client, mixed_example):
    response = client.post('/api/theorems/reduced', json=mixed_example)
    assert response.status_code == 200, response.text
    assert response.json()['is_root'] is True


def test_reduced_not_reduced(client, chain345):
    response = client.post('/api/theorems/reduced', json=chain345)
    assert response.status_code == 409, response.text


def test_scan(client):
    response = client.post('/api/theorems/scan', json={'n': [2], 'max_exp': 3})
    assert response.status_code == 200, response.text
    data = response.json()
    assert data['summary']['total'] == 10
    assert data['summary']['failed'] == 0
    assert data['summary']['exit_code'] == 0
    assert [report['status'] for report in data['reports']].count('error') == 0


def test_scan_invalid_range(client):
    response = client.post('/api/theorems/scan', json={'min_exp': 4, 'max_exp': 3})
    assert response.status_code == 422, response.text
