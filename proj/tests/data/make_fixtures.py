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
"""Regenerates the detection fixtures and their frozen reference scores.

Reference values come from pycocotools (COCO mode) and from pycocotools'
per-image matching at IoU 0.5 integrated with the all-point / 11-point VOC
rules (PASCAL mode). Nothing here is needed at build or test time; the
outputs are checked in.

    pip install pycocotools numpy
    python3 tests/data/make_fixtures.py
"""

import contextlib
import io
import json
import random
from pathlib import Path

import numpy as np
from pycocotools.coco import COCO
from pycocotools.cocoeval import COCOeval

HERE = Path(__file__).resolve().parent

BENCHMARK = [
    ("gaussian_noise", "noise"), ("shot_noise", "noise"), ("impulse_noise", "noise"),
    ("defocus_blur", "blur"), ("glass_blur", "blur"), ("motion_blur", "blur"), ("zoom_blur", "blur"),
    ("snow", "weather"), ("frost", "weather"), ("fog", "weather"), ("brightness", "weather"),
    ("contrast", "digital"), ("elastic_transform", "digital"), ("pixelate", "digital"),
    ("jpeg_compression", "digital"),
]
VALIDATION = [("speckle_noise", "noise"), ("gaussian_blur", "blur"), ("spatter", "weather"),
              ("saturate", "digital")]
GROUP_STRENGTH = {"noise": 1.3, "blur": 1.0, "weather": 0.9, "digital": 0.7}


def dump(path, obj):
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text(json.dumps(obj, indent=1) + "\n")


def make_gt(images, categories, boxes):
    anns = []
    for i, (image_id, cat, bbox, crowd) in enumerate(boxes, start=1):
        anns.append({"id": i, "image_id": image_id, "category_id": cat, "bbox": bbox,
                     "area": bbox[2] * bbox[3], "iscrowd": int(crowd)})
    return {"images": [{"id": i, "width": w, "height": h, "file_name": f"{i:06d}.jpg"} for i, w, h in images],
            "annotations": anns,
            "categories": [{"id": c, "name": n} for c, n in categories]}


def quiet(fn):
    with contextlib.redirect_stdout(io.StringIO()):
        return fn()


def coco_eval(gt, dets, iou_thrs=None, max_dets=100):
    coco_gt = quiet(lambda: _load(gt))
    coco_dt = quiet(lambda: coco_gt.loadRes(dets)) if dets else COCO()
    ev = COCOeval(coco_gt, coco_dt, "bbox")
    if iou_thrs is not None:
        ev.params.iouThrs = np.array(iou_thrs)
    ev.params.maxDets = [max_dets]
    ev.params.areaRng = [[0, 1e10]]
    ev.params.areaRngLbl = ["all"]
    quiet(ev.evaluate)
    return ev


def _load(gt):
    coco = COCO()
    coco.dataset = json.loads(json.dumps(gt))
    coco.createIndex()
    return coco


def coco_ap(gt, dets):
    """AP@[.50:.95] in percent; 101-point, 100 dets per image."""
    if not dets:
        return 0.0
    ev = coco_eval(gt, dets)
    quiet(ev.accumulate)
    prec = ev.eval["precision"][:, :, :, 0, 0]
    return float(np.mean(prec[prec > -1]) * 100)


def voc_ap(rec, prec, use_07):
    if use_07:
        ap = 0.0
        for t in np.arange(0.0, 1.1, 0.1):
            p = np.max(prec[rec >= t]) if np.sum(rec >= t) > 0 else 0.0
            ap += p / 11.0
        return ap
    mrec = np.concatenate(([0.0], rec, [1.0]))
    mpre = np.concatenate(([0.0], prec, [0.0]))
    for i in range(mpre.size - 1, 0, -1):
        mpre[i - 1] = max(mpre[i - 1], mpre[i])
    i = np.where(mrec[1:] != mrec[:-1])[0]
    return float(np.sum((mrec[i + 1] - mrec[i]) * mpre[i + 1]))


def pascal_ap(gt, dets, use_07=False):
    """AP50 in percent, per category and mean, with no detection cap."""
    cats = sorted(c["id"] for c in gt["categories"])
    per_cat = {}
    if not dets:
        for c in cats:
            n_pos = sum(1 for a in gt["annotations"] if a["category_id"] == c and not a["iscrowd"])
            per_cat[c] = 0.0 if n_pos else None
    else:
        ev = coco_eval(gt, dets, iou_thrs=[0.5], max_dets=10 ** 6)
        img_ids = ev.params.imgIds
        for k, c in enumerate(ev.params.catIds):
            entries = [e for e in ev.evalImgs[k * len(img_ids):(k + 1) * len(img_ids)] if e is not None]
            n_pos = sum(int(np.count_nonzero(e["gtIgnore"] == 0)) for e in entries)
            if n_pos == 0:
                per_cat[c] = None
                continue
            scores = np.concatenate([e["dtScores"] for e in entries]) if entries else np.zeros(0)
            matched = np.concatenate([e["dtMatches"][0] for e in entries]) if entries else np.zeros(0)
            ignored = np.concatenate([e["dtIgnore"][0] for e in entries]) if entries else np.zeros(0)
            order = np.argsort(-scores, kind="mergesort")
            matched, ignored = matched[order], ignored[order]
            keep = ignored == 0
            tp = np.cumsum((matched != 0)[keep]).astype(float)
            fp = np.cumsum((matched == 0)[keep]).astype(float)
            rec = tp / n_pos
            prec = tp / np.maximum(tp + fp, np.finfo(np.float64).eps)
            per_cat[c] = voc_ap(rec, prec, use_07) * 100
    defined = [v for v in per_cat.values() if v is not None]
    return float(np.mean(defined)), per_cat


def r3(x):
    return [round(v, 2) for v in x]


# ---------------------------------------------------------------------------
# Toy benchmark: 3 images, handcrafted clean detections, scripted degradations.

TOY_IMAGES = [(1, 640, 480), (2, 640, 480), (3, 500, 375)]
TOY_CATEGORIES = [(1, "car"), (2, "person"), (3, "bicycle")]
TOY_BOXES = [
    (1, 1, [50, 60, 200, 120], False), (1, 1, [300, 200, 150, 100], False), (1, 2, [420, 40, 60, 150], False),
    (2, 2, [100, 100, 80, 200], False), (2, 2, [250, 120, 70, 180], False), (2, 3, [240, 250, 120, 90], False),
    (2, 1, [450, 300, 160, 110], False),
    (3, 1, [30, 200, 180, 100], False), (3, 2, [300, 50, 50, 140], False), (3, 2, [200, 180, 250, 180], True),
    (3, 3, [60, 60, 100, 70], False),
]
TOY_CLEAN = [
    (1, 1, [52, 58, 197, 124], 0.97), (1, 1, [305, 196, 146, 103], 0.91), (1, 2, [418, 45, 63, 141], 0.88),
    (1, 2, [410, 30, 70, 170], 0.35), (1, 3, [500, 350, 80, 60], 0.22),
    (2, 2, [103, 98, 77, 205], 0.95), (2, 2, [262, 130, 64, 170], 0.74), (2, 3, [236, 248, 126, 95], 0.83),
    (2, 1, [455, 296, 150, 118], 0.90), (2, 1, [20, 20, 90, 60], 0.41),
    (3, 1, [35, 198, 170, 104], 0.93), (3, 2, [297, 55, 55, 133], 0.86), (3, 2, [230, 200, 60, 120], 0.66),
    (3, 3, [70, 66, 85, 60], 0.58), (3, 3, [62, 58, 104, 74], 0.52),
]


def toy_detections(name, group, severity):
    if severity == 0:
        return [{"image_id": i, "category_id": c, "bbox": b, "score": s} for i, c, b, s in TOY_CLEAN]
    rng = random.Random(f"{name}/{severity}")
    strength = severity * GROUP_STRENGTH[group]
    out = []
    for image_id, cat, (x, y, w, h), score in TOY_CLEAN:
        if rng.random() < min(0.85, 0.07 * strength):
            continue
        j = 2.0 * strength
        box = [x + rng.gauss(0, j), y + rng.gauss(0, j), max(4.0, w + rng.gauss(0, j)), max(4.0, h + rng.gauss(0, j))]
        score *= 1.0 - 0.08 * strength * rng.random()
        out.append({"image_id": image_id, "category_id": cat, "bbox": r3(box), "score": round(max(score, 0.01), 4)})
    for _ in range(int(strength // 2)):
        image_id, w, h = rng.choice(TOY_IMAGES)
        box = [rng.uniform(0, w - 60), rng.uniform(0, h - 60), rng.uniform(20, 60), rng.uniform(20, 60)]
        out.append({"image_id": image_id, "category_id": rng.choice(TOY_CATEGORIES)[0], "bbox": r3(box),
                    "score": round(rng.uniform(0.05, 0.7), 4)})
    return out


def build_toy():
    root = HERE / "toy"
    gt = make_gt(TOY_IMAGES, TOY_CATEGORIES, TOY_BOXES)
    dump(root / "gt.json", gt)
    expected = {"coco": {}, "pascal": {}}
    conditions = [("clean", None, 0)] + [(n, g, s) for n, g in BENCHMARK + VALIDATION for s in range(1, 6)]
    for name, group, sev in conditions:
        dets = toy_detections(name, group, sev)
        path = root / "dets" / ("clean.json" if sev == 0 else f"{name}/{sev}.json")
        dump(path, dets)
        key = "clean" if sev == 0 else f"{name}/{sev}"
        expected["coco"][key] = coco_ap(gt, dets)
        expected["pascal"][key] = pascal_ap(gt, dets)[0]
    for mode in ("coco", "pascal"):
        cells = expected[mode]
        per_c = [np.mean([cells[f"{n}/{s}"] for s in range(1, 6)]) for n, _ in BENCHMARK]
        mpc = float(np.mean(per_c))
        expected[mode]["summary"] = {"p_clean": cells["clean"], "mpc": mpc, "rpc": 100 * mpc / cells["clean"]}
    dump(root / "expected.json", expected)

    # Incomplete grid for the partial-aggregation path: clean plus two cells.
    partial = HERE / "toy_partial"
    dump(partial / "dets" / "clean.json", toy_detections("clean", None, 0))
    dump(partial / "dets" / "fog" / "3.json", toy_detections("fog", "weather", 3))
    dump(partial / "dets" / "snow" / "1.json", toy_detections("snow", "weather", 1))


# ---------------------------------------------------------------------------
# Two-class PASCAL fixture: no contested matches, so VOC-style argmax
# matching and greedy matching agree.

def build_pascal2():
    images = [(1, 500, 400), (2, 500, 400), (3, 500, 400), (4, 500, 400)]
    cats = [(1, "aeroplane"), (2, "dog")]
    boxes = [
        (1, 1, [10, 10, 100, 50], False), (1, 2, [200, 150, 80, 90], False),
        (2, 1, [300, 40, 150, 70], False), (2, 1, [30, 250, 120, 60], False),
        (3, 2, [60, 60, 90, 110], False), (3, 2, [250, 200, 100, 120], False), (3, 2, [400, 20, 60, 60], False),
        (4, 1, [100, 100, 200, 120], False),
    ]
    gt = make_gt(images, cats, boxes)
    dets = [
        {"image_id": 1, "category_id": 1, "bbox": [12, 12, 98, 47], "score": 0.95},
        {"image_id": 2, "category_id": 1, "bbox": [295, 45, 150, 66], "score": 0.90},
        {"image_id": 4, "category_id": 1, "bbox": [350, 300, 80, 60], "score": 0.85},
        {"image_id": 2, "category_id": 1, "bbox": [80, 250, 120, 60], "score": 0.70},
        {"image_id": 4, "category_id": 1, "bbox": [105, 96, 190, 130], "score": 0.60},
        {"image_id": 3, "category_id": 1, "bbox": [10, 300, 60, 60], "score": 0.30},
        {"image_id": 1, "category_id": 2, "bbox": [205, 148, 78, 95], "score": 0.92},
        {"image_id": 3, "category_id": 2, "bbox": [0, 0, 50, 50], "score": 0.88},
        {"image_id": 3, "category_id": 2, "bbox": [255, 205, 95, 110], "score": 0.81},
        {"image_id": 3, "category_id": 2, "bbox": [65, 58, 85, 115], "score": 0.64},
        {"image_id": 2, "category_id": 2, "bbox": [300, 300, 70, 70], "score": 0.40},
    ]
    root = HERE / "pascal2"
    dump(root / "gt.json", gt)
    dump(root / "dets.json", dets)
    p_all, per_all = pascal_ap(gt, dets, use_07=False)
    p_07, per_07 = pascal_ap(gt, dets, use_07=True)
    dump(root / "expected.json", {
        "all_point": {"p": p_all, "per_category": {str(k): v for k, v in per_all.items()}},
        "voc07": {"p": p_07, "per_category": {str(k): v for k, v in per_07.items()}},
        "coco": {"p": coco_ap(gt, dets)},
    })


# ---------------------------------------------------------------------------
# Random COCO cross-check fixtures (crowd regions included, no plain ignore
# flags since pycocotools only honours iscrowd).

def build_crosscheck():
    rng = random.Random(20190710)
    cases = []
    for case in range(40):
        n_img = rng.randint(1, 4)
        images = [(i + 1, 200, 200) for i in range(n_img)]
        cats = [(1, "a"), (2, "b")]
        boxes, dets = [], []
        for image_id, _, _ in images:
            for _ in range(rng.randint(0, 4)):
                w, h = rng.uniform(15, 80), rng.uniform(15, 80)
                box = [rng.uniform(0, 200 - w), rng.uniform(0, 200 - h), w, h]
                boxes.append((image_id, rng.choice([1, 2]), r3(box), rng.random() < 0.1))
        for image_id, cat, box, _ in boxes:
            for _ in range(rng.randint(0, 2)):
                j = rng.uniform(0, 12)
                dbox = [box[0] + rng.uniform(-j, j), box[1] + rng.uniform(-j, j),
                        max(3.0, box[2] + rng.uniform(-j, j)), max(3.0, box[3] + rng.uniform(-j, j))]
                dets.append({"image_id": image_id, "category_id": cat if rng.random() < 0.9 else 3 - cat,
                             "bbox": r3(dbox), "score": round(rng.random(), 4)})
        for _ in range(rng.randint(0, 3)):
            image_id = rng.randint(1, n_img)
            w, h = rng.uniform(10, 60), rng.uniform(10, 60)
            dets.append({"image_id": image_id, "category_id": rng.choice([1, 2]),
                         "bbox": r3([rng.uniform(0, 200 - w), rng.uniform(0, 200 - h), w, h]),
                         "score": round(rng.random(), 4)})
        if not any(not crowd for *_, crowd in boxes):
            continue
        gt = make_gt(images, cats, boxes)
        cases.append({"gt": gt, "dets": dets, "coco": coco_ap(gt, dets), "pascal": pascal_ap(gt, dets)[0],
                      "voc07": pascal_ap(gt, dets, use_07=True)[0]})
    dump(HERE / "crosscheck.json", cases)


if __name__ == "__main__":
    build_toy()
    build_pascal2()
    build_crosscheck()
