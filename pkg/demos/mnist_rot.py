"""
Classifying rotated digits
==========================

Walks through the command line workflow on rotated MNIST digits, then
inspects a trained classifier from Python. Pass the directory holding the
four MNIST IDX files as the first argument.

    python demos/mnist_rot.py /path/to/mnist
"""

import subprocess
import sys
from pathlib import Path

import numpy as np

from roteqnet import network as N
from roteqnet.data import load_dataset, test_time_augment

mnist = sys.argv[1] if len(sys.argv) > 1 else "/root/data/mnist"
work = Path("demo-output")


def roteqnet(*args):
    cmd = [sys.executable, "-m", "roteqnet", *map(str, args)]
    print("$", " ".join(cmd[2:]), flush=True)
    subprocess.run(cmd, check=True)


# A small split keeps this to a few minutes; the real setup is 10k/2k/50k
roteqnet("prepare", "--mnist-dir", mnist, "--sizes", "2000,500,1000", "--out", work / "data")
roteqnet("train", "--data", work / "data", "--r", 8, "--filters-multiplier", 0.5,
         "--epochs", 8, "--batch", 32, "--lr-start", 0.1, "--lr-end", 0.01, "--out", work / "run")
roteqnet("eval", "--checkpoint", work / "run" / "final.ckpt", "--data", work / "data",
         "--invariance")

model, meta = N.load_checkpoint(work / "run" / "final.ckpt")
test = load_dataset(work / "data").test
scores = N.predict(model, test.x)
print("trained for", meta["epoch"], "epochs; error", np.mean(scores.argmax(1) != test.labels))

# Quarter turns give the same scores up to rounding
turned = N.predict(model, np.ascontiguousarray(np.rot90(test.x[:8], 1, axes=(1, 2))))
print("largest score change under a quarter turn:", np.abs(turned - scores[:8]).max())

# Averaging over rotated copies smooths the remaining angle dependence
tta = test_time_augment(model, test.x, k=4)
print("error with 4 rotated copies:", np.mean(tta.argmax(1) != test.labels))

# The same weights run with more orientations
model.set_R(16)
print("error at R=16:", np.mean(N.predict(model, test.x).argmax(1) != test.labels))
