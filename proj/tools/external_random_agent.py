#!/usr/bin/env python3
# Copyright 2026 The hanabi-adhoc Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#    https://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Minimal external agent speaking the line protocol on stdin/stdout.

Handshake (read once):  {"protocol":1,"num_players":P,"hand_size":H,"action_space":A}
Per turn:               {"obs": {...,"legal_actions":[...]}} -> {"action": k}

Picks a uniformly random legal action. Set HANABI_AGENT_SEED for a
reproducible stream, or HANABI_AGENT_MISBEHAVE=1 to answer with an illegal
action (used to exercise protocol-violation handling).
"""

import json
import os
import random
import sys


def main() -> int:
    rng = random.Random(int(os.environ.get("HANABI_AGENT_SEED", "0")))
    misbehave = os.environ.get("HANABI_AGENT_MISBEHAVE") == "1"
    handshake = None
    for line in sys.stdin:
        line = line.strip()
        if not line:
            continue
        message = json.loads(line)
        if "protocol" in message:
            if message["protocol"] != 1:
                return 1
            handshake = message
            continue
        legal = message["obs"]["legal_actions"]
        if misbehave:
            action = handshake["action_space"] if handshake else 10_000
        else:
            action = rng.choice(legal)
        sys.stdout.write(json.dumps({"action": action}) + "\n")
        sys.stdout.flush()
    return 0


if __name__ == "__main__":
    sys.exit(main())
