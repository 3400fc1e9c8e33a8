#!/usr/bin/env python3
# Copyright 2026 The CorruptBench Authors. All Rights Reserved.
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.
"""Regenerates assets/corpus and assets/frost.

The corpus is a downscaled selection of the scikit-image sample photographs.
Frost textures are synthesized procedurally (branching ice crystals over a
cold haze) with a fixed seed, so the output is reproducible.
"""
import os
import sys

import numpy as np
from PIL import Image, ImageFilter
from skimage import data as skdata

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "assets")

CORPUS = [
    ("astronaut.png", 224), ("chelsea.png", 200), ("coffee.png", 216),
    ("rocket.jpg", 192), ("motorcycle_left.png", 224), ("motorcycle_right.png", 160),
    ("hubble_deep_field.jpg", 176), ("retina.jpg", 160), ("ihc.png", 168),
    ("color.png", 144), ("horse.png", 180), ("logo.png", 150),
    ("flag", 112), ("cat", 128), ("camera.png", 192), ("coins.png", 176),
    ("moon.png", 144), ("brick.png", 128), ("page.png", 200), ("text.png", 208),
]


def load(name):
    if name == "flag":
        return skdata.astronaut()[0:240, 272:512]
    if name == "cat":
        # A tighter crop of chelsea so the two are not near-duplicates.
        return skdata.chelsea()[40:260, 120:400]
    return np.asarray(Image.open(os.path.join(os.path.dirname(skdata.__file__), name)))


def save_corpus():
    out = os.path.join(ROOT, "corpus")
    os.makedirs(out, exist_ok=True)
    for i, (name, long_side) in enumerate(CORPUS):
        arr = load(name)
        if arr.dtype == bool:
            arr = arr.astype(np.uint8) * 255
        img = Image.fromarray(arr)
        if img.mode == "RGBA":
            img = img.convert("RGB")
        w, h = img.size
        s = long_side / max(w, h)
        img = img.resize((max(16, round(w * s)), max(16, round(h * s))), Image.LANCZOS)
        img.save(os.path.join(out, f"{i:02d}_{os.path.splitext(name)[0]}.png"), optimize=True)


def crystal_layer(rng, h, w, n_seeds):
    canvas = np.zeros((h, w), np.float64)
    stack = []
    for _ in range(n_seeds):
        stack.append((rng.uniform(0, w), rng.uniform(0, h), rng.uniform(0, 2 * np.pi),
                      rng.uniform(40, 120), 0))
    while stack:
        x, y, ang, length, depth = stack.pop()
        steps = int(length)
        bright = 0.9 / (1 + depth)
        for _ in range(steps):
            xi, yi = int(x) % w, int(y) % h
            canvas[yi, xi] = max(canvas[yi, xi], bright)
            ang += rng.normal(0, 0.08)
            x += np.cos(ang)
            y += np.sin(ang)
            if depth < 4 and rng.random() < 0.035:
                side = rng.choice([-1, 1]) * rng.uniform(0.6, 1.1)
                stack.append((x, y, ang + side, length * rng.uniform(0.3, 0.6), depth + 1))
    return canvas


def save_frost():
    out = os.path.join(ROOT, "frost")
    os.makedirs(out, exist_ok=True)
    sizes = [(384, 384), (512, 384), (320, 480), (448, 448), (300, 400), (480, 360)]
    rng = np.random.default_rng(20190710)
    for i, (w, h) in enumerate(sizes):
        lines = crystal_layer(rng, h, w, n_seeds=int(w * h / 1500))
        sharp = np.asarray(Image.fromarray((lines * 255).astype(np.uint8))
                           .filter(ImageFilter.GaussianBlur(0.7)), np.float64) / 255
        glow = np.asarray(Image.fromarray((lines * 255).astype(np.uint8))
                          .filter(ImageFilter.GaussianBlur(4)), np.float64) / 255
        haze = rng.normal(0, 1, (h // 16 + 1, w // 16 + 1))
        haze = np.asarray(Image.fromarray(((haze - haze.min()) / np.ptp(haze) * 255)
                                          .astype(np.uint8)).resize((w, h), Image.BICUBIC),
                          np.float64) / 255
        grain = rng.normal(0, 0.03, (h, w))
        lum = np.clip(0.12 + 0.25 * haze + 1.6 * sharp + 2.5 * glow + grain, 0, 1)
        tint = np.array([0.86, 0.93, 1.0])
        rgb = np.clip(lum[..., None] * tint[None, None, :] * 255, 0, 255).astype(np.uint8)
        Image.fromarray(rgb).save(os.path.join(out, f"frost{i + 1}.jpg"), quality=92)


if __name__ == "__main__":
    save_corpus()
    save_frost()
    sys.exit(0)
