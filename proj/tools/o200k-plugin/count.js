#!/usr/bin/env node
// Counter plugin: reads "<byte length>\n<bytes>" requests on stdin and
// answers each with "<token count>\n".
"use strict";

const { Tiktoken } = require("js-tiktoken/lite");
const o200k = require("js-tiktoken/ranks/o200k_base");

const enc = new Tiktoken(o200k);
let buf = Buffer.alloc(0);

function drain() {
  for (;;) {
    const nl = buf.indexOf(10);
    if (nl < 0) return;
    const len = Number(buf.subarray(0, nl).toString("ascii"));
    if (!Number.isInteger(len) || len < 0) {
      process.stderr.write("bad length header\n");
      process.exit(2);
    }
    if (buf.length < nl + 1 + len) return;
    const text = buf.subarray(nl + 1, nl + 1 + len).toString("utf8");
    buf = buf.subarray(nl + 1 + len);
    process.stdout.write(enc.encode(text).length + "\n");
  }
}

process.stdin.on("data", (chunk) => {
  buf = Buffer.concat([buf, chunk]);
  drain();
});
process.stdin.on("end", () => process.exit(buf.length === 0 ? 0 : 2));
