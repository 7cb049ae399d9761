# fixture program 045
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
offset = 77
print(sequence_items[offset % 3])
window_size = 256
print('size', window_size)
selected_ids = {288, 271}
print(len(selected_ids))
selected_ids.add(7)
accuracy = 0.669
if accuracy < 0.9:
    print('low')
accuracy = 0.1
buffer_stream = io.StringIO('Island falcon!')
buffer_stream.seek(0)
first_line = buffer_stream.readline()
resolution = (256, 64)
width, height = resolution
print('size', resolution)
visible = False
if visible:
    print('yes')
if not visible:
    print('no')
column = 'meadow'
print('column', column)
lookup = {column: 0}
column = 'stone_cloud'
for loop_round in range(2):
    age_years = 88
    print(age_years)
