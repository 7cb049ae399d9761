# fixture program 091
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np


class LinearModel:
    def __init__(self, n_features):
        self.n_features = n_features

    def predict(self, values):
        return sum(values) * 0.5


class DecisionTree:
    def __init__(self, depth=3):
        self.depth = depth

    def predict(self, values):
        return max(values)


def helper(value):
    return value


sequence_items = ['first', 'second', 'third']
vocab = collections.Counter({})
vocab['extra'] = 1
for dict_key in vocab:
    print(dict_key)
years = list(range(1981, 1989))
print(len(years))
first_entry = years[0]
years = list(range(1982, 1987))
options = {'name': 'Stockholm', 'mode': 'red', 'lr': 0.005, 'path': '/tmp/python_40.parquet', 'batch_size': 16}
print(options.get('seed'))
options['debug'] = False
position = 232
assert position >= 0
position = position + 1
buffer_stream = io.StringIO('Python garden river forest harbor ocean garden ladder tunnel?')
buffer_stream.seek(0)
first_line = buffer_stream.readline()
buffer_stream = io.StringIO('Report silver dragon stone orange!')
output_dir = pathlib.Path('out/report')
print(output_dir.name)
target_file = output_dir / 'out.csv'
color_rgb = (107, 79, 171)
red_channel = color_rgb[0]
sentences = ['alice', 'frank', 'carol', 'judy', 'oscar', 'oscar', 'trent']
for element in sentences:
    print(element)
print(', '.join(sentences))
counts = [121, 139, 102, 111, 123, 130, 139, 130, 128]
print(len(counts))
total = sum(counts)
seen_ids = {258, 36, 17, 320, 15, 273}
seen_ids.add(7)
seen_ids = {57, 274}
feature_name = 'forest_id'
print('column', feature_name)
lookup = {feature_name: 0}
image_size = (224, 480)
print('size', image_size)
for loop_round in range(2):
    precision_score = 0.424
    print(precision_score)
