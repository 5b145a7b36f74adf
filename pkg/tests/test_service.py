"""HTTP session service tests."""

import warnings

import pytest

warnings.filterwarnings("ignore", category=DeprecationWarning)

from fastapi.testclient import TestClient

from babylon.service import create_app


@pytest.fixture()
def client():
    return TestClient(create_app())


def new_game(client, **body):
    response = client.post("/games", json=body)
    assert response.status_code == 200, response.text
    return response.json()


class TestCreateGame:
    def test_two_color_session(self, client):
        view = new_game(client, p=3, q=9, human_side="first")
        assert view["state_angle"] == "<3,9;;>"
        assert view["predicted_winner"] == "second"
        assert view["status"] == "in-progress"
        assert len(view["stacks"]) == 2  # two singleton classes

    def test_invalid_config_rejected(self, client):
        response = client.post("/games", json={"p": 0, "q": 4})
        assert response.status_code == 400
        assert response.json()["code"] == "invalid-config"

    def test_four_color_session(self, client):
        view = new_game(client, colors=[3, 3, 3, 3], human_side="first")
        assert view["colors"] == [3, 3, 3, 3]
        assert "state_angle" not in view

    def test_unknown_session(self, client):
        assert client.get("/games/nope").status_code == 404


class TestMoves:
    def test_legal_move_list_matches_engine(self, client):
        view = new_game(client, p=2, q=2, human_side="first")
        moves = client.get(f"/games/{view['id']}/moves").json()["moves"]
        assert sorted(moves) == sorted(
            ["r@1>r@1", "r@1>b@1", "b@1>r@1", "b@1>b@1"]
        )

    def test_submit_advances_state(self, client):
        view = new_game(client, p=3, q=9, human_side="first")
        response = client.post(f"/games/{view['id']}/moves", json={"move": "r@1>r@1"})
        body = response.json()
        assert body["state_angle"] == "<1,9;2;>"
        assert body["history"][-1]["actor"] == "human"

    def test_illegal_move_names_clauses(self, client):
        view = new_game(client, p=3, q=9, human_side="first")
        response = client.post(f"/games/{view['id']}/moves", json={"move": "r@1>b@2"})
        assert response.status_code == 400
        assert response.json()["code"] == "illegal-move"
        assert "clause" in response.json()

    def test_turn_alternation_enforced(self, client):
        view = new_game(client, p=3, q=9, human_side="first")
        client.post(f"/games/{view['id']}/moves", json={"move": "r@1>r@1"})
        response = client.post(f"/games/{view['id']}/moves", json={"move": "b@1>b@1"})
        assert response.status_code == 409
        assert response.json()["code"] == "not-your-turn"

    def test_game_ending_move_finishes_session(self, client):
        view = new_game(client, p=1, q=1, human_side="first")
        body = client.post(f"/games/{view['id']}/moves", json={"move": "r@1>b@1"}).json()
        assert body["status"] == "finished"
        assert body["winner"] == "first"


class TestEngineMove:
    def test_scripted_reply_carries_rule_tag(self, client):
        view = new_game(client, p=6, q=6, human_side="first")
        client.post(f"/games/{view['id']}/moves", json={"move": "r@1>r@1"})
        body = client.post(f"/games/{view['id']}/engine-move").json()
        assert body["engine_reply"] == {
            "move": "b@1>b@1",
            "rule_tag": "opening.xx->yy",
            "fallback_used": False,
        }

    def test_three_minority_game_uses_fallback(self, client):
        view = new_game(client, p=3, q=9, human_side="first")
        client.post(f"/games/{view['id']}/moves", json={"move": "r@1>r@1"})
        body = client.post(f"/games/{view['id']}/engine-move").json()
        assert body["engine_reply"]["rule_tag"] == "fallback"
        assert body["engine_reply"]["fallback_used"] is True

    def test_engine_on_losing_side_still_moves(self, client):
        view = new_game(client, p=2, q=6, human_side="first")
        client.post(f"/games/{view['id']}/moves", json={"move": "r@1>r@1"})
        body = client.post(f"/games/{view['id']}/engine-move").json()
        assert body["engine_reply"]["rule_tag"] in ("fallback", "losing-position")

    def test_not_engine_turn(self, client):
        view = new_game(client, p=3, q=9, human_side="first")
        response = client.post(f"/games/{view['id']}/engine-move")
        assert response.status_code == 409
        assert response.json()["code"] == "not-engine-turn"

    def test_four_color_engine_plays_solver_moves(self, client):
        view = new_game(client, colors=[3, 3, 3, 3], human_side="first")
        client.post(f"/games/{view['id']}/moves", json={"move": "r@1>r@1"})
        body = client.post(f"/games/{view['id']}/engine-move").json()
        assert body["engine_reply"]["fallback_used"] is True

    def test_full_scripted_game(self, client):
        # engine second in (4,4); drive the human side with any legal move
        view = new_game(client, p=4, q=4, human_side="first")
        gid = view["id"]
        state = view
        while state["status"] == "in-progress":
            if state["to_move"] == "first":
                moves = client.get(f"/games/{gid}/moves").json()["moves"]
                state = client.post(
                    f"/games/{gid}/moves", json={"move": moves[0]}
                ).json()
            else:
                body = client.post(f"/games/{gid}/engine-move").json()
                assert body["engine_reply"]["rule_tag"]
                state = body
        assert state["winner"] == "second"


class TestAudit:
    def test_replay_matches_current_state(self, client):
        view = new_game(client, p=6, q=6, human_side="first")
        gid = view["id"]
        client.post(f"/games/{gid}/moves", json={"move": "r@1>b@1"})
        client.post(f"/games/{gid}/engine-move")
        client.post(f"/games/{gid}/moves", json={"move": "b@1>b@1"})
        client.post(f"/games/{gid}/engine-move")
        audit = client.get(f"/games/{gid}/audit").json()
        assert audit["consistent"] is True
        assert audit["events"] == 4

    def test_history_alternates_actors(self, client):
        view = new_game(client, p=5, q=5, human_side="first")
        gid = view["id"]
        client.post(f"/games/{gid}/moves", json={"move": "r@1>r@1"})
        client.post(f"/games/{gid}/engine-move")
        client.post(f"/games/{gid}/moves", json={"move": "b@1>b@1"})
        history = client.get(f"/games/{gid}").json()["history"]
        actors = [h["actor"] for h in history]
        assert actors == ["human", "engine", "human"]


class TestJournal:
    def test_sessions_survive_restart(self, tmp_path):
        journal = str(tmp_path / "games.jsonl")
        first = TestClient(create_app(journal_path=journal))
        view = new_game(first, p=6, q=8, human_side="first")
        gid = view["id"]
        first.post(f"/games/{gid}/moves", json={"move": "r@1>b@1"})
        reply = first.post(f"/games/{gid}/engine-move").json()
        expected_state = reply["state"]

        reborn = TestClient(create_app(journal_path=journal))
        restored = reborn.get(f"/games/{gid}").json()
        assert restored["state"] == expected_state
        assert [h["actor"] for h in restored["history"]] == ["human", "engine"]
        # play continues through the restored scripted memory
        reborn.post(f"/games/{gid}/moves", json={"move": "b@1>b@1"})
        body = reborn.post(f"/games/{gid}/engine-move").json()
        assert body["engine_reply"]["rule_tag"] == "even-hill.xz"
