"""Accounts and sessions in a single sqlite file.

Passwords are stored as salted PBKDF2-HMAC-SHA256 digests with the
parameters alongside; plaintext never touches disk or logs. Session tokens
are 128-bit URL-safe random values with a 24h lifetime.
"""

from __future__ import annotations

import hashlib
import hmac
import secrets
import sqlite3
import threading
import time
from dataclasses import dataclass
from pathlib import Path

PBKDF2_ITERATIONS = 200_000
SESSION_LIFETIME_S = 24 * 3600
MAX_USERNAME_LEN = 64
MIN_PASSWORD_LEN = 8


class AccountError(Exception):
    pass


class DuplicateUsername(AccountError):
    pass


class InvalidCredentials(AccountError):
    pass


class PolicyViolation(AccountError):
    pass


@dataclass(frozen=True)
class Session:
    token: str
    username: str
    expires_at: float


def _hash_password(password: str, salt: bytes, iterations: int) -> bytes:
    return hashlib.pbkdf2_hmac("sha256", password.encode("utf-8"), salt, iterations)


class AccountStore:
    def __init__(self, db_path: str | Path):
        Path(db_path).parent.mkdir(parents=True, exist_ok=True)
        self._conn = sqlite3.connect(str(db_path), check_same_thread=False)
        self._lock = threading.Lock()
        with self._lock:
            self._conn.executescript("""
                CREATE TABLE IF NOT EXISTS accounts (
                    username TEXT PRIMARY KEY,
                    salt BLOB NOT NULL,
                    digest BLOB NOT NULL,
                    iterations INTEGER NOT NULL,
                    created_at REAL NOT NULL
                );
                CREATE TABLE IF NOT EXISTS sessions (
                    token TEXT PRIMARY KEY,
                    username TEXT NOT NULL,
                    expires_at REAL NOT NULL
                );
            """)
            self._conn.commit()

    def close(self):
        self._conn.close()

    def signup(self, username: str, password: str) -> None:
        if not username or len(username) > MAX_USERNAME_LEN:
            raise PolicyViolation(f"username must be 1-{MAX_USERNAME_LEN} characters")
        if len(password) < MIN_PASSWORD_LEN:
            raise PolicyViolation(f"password must be at least {MIN_PASSWORD_LEN} characters")
        salt = secrets.token_bytes(16)
        digest = _hash_password(password, salt, PBKDF2_ITERATIONS)
        with self._lock:
            try:
                self._conn.execute(
                    "INSERT INTO accounts VALUES (?, ?, ?, ?, ?)",
                    (username, salt, digest, PBKDF2_ITERATIONS, time.time()))
                self._conn.commit()
            except sqlite3.IntegrityError:
                raise DuplicateUsername(username) from None

    def login(self, username: str, password: str) -> Session:
        with self._lock:
            row = self._conn.execute(
                "SELECT salt, digest, iterations FROM accounts WHERE username = ?",
                (username,)).fetchone()
        if row is None:
            # burn the same work as a real check so timing does not leak
            # whether the username exists
            _hash_password(password, b"\x00" * 16, PBKDF2_ITERATIONS)
            raise InvalidCredentials()
        salt, digest, iterations = row
        candidate = _hash_password(password, salt, iterations)
        if not hmac.compare_digest(candidate, digest):
            raise InvalidCredentials()
        session = Session(token=secrets.token_urlsafe(16), username=username,
                          expires_at=time.time() + SESSION_LIFETIME_S)
        with self._lock:
            self._conn.execute("INSERT INTO sessions VALUES (?, ?, ?)",
                               (session.token, session.username, session.expires_at))
            self._conn.commit()
        return session

    def validate(self, token: str | None) -> Session | None:
        if not token:
            return None
        with self._lock:
            row = self._conn.execute(
                "SELECT username, expires_at FROM sessions WHERE token = ?",
                (token,)).fetchone()
        if row is None or row[1] < time.time():
            return None
        return Session(token=token, username=row[0], expires_at=row[1])
