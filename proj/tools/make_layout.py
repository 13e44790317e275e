#!/usr/bin/env python3
"""Writes data/persian_keyboard.tsv and data/persian_homophones.tsv."""
import pathlib
import sys

# Standard Persian layout laid over the QWERTY letter rows.
ROWS = [
    "ضصثقفغعهخحجچ",
    "شسیبلاتنمکگ",
    "ظطزرذدپو",
]

HOMOPHONES = ["سصث", "زذضظ", "تط", "هح", "قغ", "اع"]


def keyboard():
    out = {}
    for r, row in enumerate(ROWS):
        for c, ch in enumerate(row):
            near = []
            for cc in (c - 1, c + 1):
                if 0 <= cc < len(row):
                    near.append(row[cc])
            for rr in (r - 1, r + 1):
                if 0 <= rr < len(ROWS):
                    for cc in (c - 1, c, c + 1):
                        if 0 <= cc < len(ROWS[rr]):
                            near.append(ROWS[rr][cc])
            out[ch] = near
    return out


def homophones():
    out = {}
    for group in HOMOPHONES:
        for ch in group:
            out[ch] = [o for o in group if o != ch]
    return out


def write(path, table, header):
    lines = [f"# {header}"]
    for ch in sorted(table):
        lines.append(ch + "\t" + ",".join(table[ch]))
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")


def main():
    root = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else ".")
    (root / "data").mkdir(exist_ok=True)
    write(root / "data" / "persian_keyboard.tsv", keyboard(), "letter<TAB>adjacent keys")
    write(root / "data" / "persian_homophones.tsv", homophones(), "letter<TAB>sound-alike letters")


if __name__ == "__main__":
    main()
