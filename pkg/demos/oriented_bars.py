"""
Predicting the orientation of a bar
===================================

A small orientation regressor learns to point at the bright end of a
bar. The output angle follows the input: turning the image by 90 degrees
adds 90 degrees to the prediction, trained or not.
"""

import numpy as np

from roteqnet import network as N
from roteqnet.data import make_oriented_shapes, render_bar
from roteqnet.layers import angle_of
from roteqnet.tensor import Rng

ds = make_oriented_shapes(300, seed=1, n_test=50)
print("train", ds.train.x.shape, "test", ds.test.x.shape)

model = N.build(N.covariant_48(R=8), Rng(0), dtype=np.float32)
config = N.TrainConfig(epochs=4, lr_start=5e-3, lr_end=5e-3, weight_decay=0.01, batch=32)


def report(rec, m):
    print(f"epoch {rec.epoch}: loss {rec.train_loss:.3f}, train error {rec.train_err:.1f} deg")


data = (ds.train.x, ds.train.targets, ds.test.x, ds.test.targets)
model, history = N.train(model, config, data, Rng(0), on_epoch=report)

pred = angle_of(N.predict(model, ds.test.x))
err = N.angular_error(pred, ds.test.angles)
print(f"held-out mean error {err.mean():.1f} deg, median {np.median(err):.1f} deg")

# Covariance check on one bar
img = render_bar(30.0)[None, :, :, None]
a = angle_of(model.forward(img)[0])[0]
b = angle_of(model.forward(np.rot90(img, 1, axes=(1, 2)))[0])[0]
print(f"bar at 30 deg -> {a:.1f}; turned 90 deg -> {b:.1f} (difference {(b - a) % 360:.6f})")
