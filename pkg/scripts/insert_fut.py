#!/usr/bin/env python3
"""Example function-under-test process: ordered-list insert.

Speaks the driver's pipe protocol: one JSON object per line on stdin,
{"args": [...]}, answered on stdout with {"result": ...} or
{"error": "..."}.  Values are ints, bools, or {"ctor": name, "fields": [...]}.
Run it with:

    target check --spec src/target/specs/sortedlist.tspec --fun insert \
        --cmd "python3 scripts/insert_fut.py" --depth 3 --int-bound 8
"""
import json
import sys


def insert(x, xs):
    if xs["ctor"] == "ONil":
        return {"ctor": "OCons", "fields": [x, xs]}
    h, t = xs["fields"]
    if x <= h:
        return {"ctor": "OCons", "fields": [x, xs]}
    return {"ctor": "OCons", "fields": [h, insert(x, t)]}


def main():
    for line in sys.stdin:
        if not line.strip():
            continue
        try:
            args = json.loads(line)["args"]
            print(json.dumps({"result": insert(*args)}), flush=True)
        except Exception as e:
            print(json.dumps({"error": f"{type(e).__name__}: {e}"}), flush=True)


if __name__ == "__main__":
    main()
