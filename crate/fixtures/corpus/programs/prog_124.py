# fixture program 124
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
origin = (-43, 48)
x_coord, y_coord = origin
print('at', origin)
timestamp_str = '2020-07-01'
year_part = timestamp_str[:4]
visited_nodes = {436}
print(len(visited_nodes))
visited_nodes.add(7)
encoded = 'Butter tunnel ladder forest engine pepper'.encode()
print(len(encoded))
log_files = ['../data/tunnel_84.txt']
print(len(log_files), 'files')
separator = ':'
joined = separator.join(['a', 'b'])
color_rgb = (171, 51, 50)
red_channel = color_rgb[0]
color_rgb = (130, 122, 113)
transform = lambda x: x + 1
print(callable(transform))
output = transform(4)
previous = None
if previous is None:
    print('empty')
a = 7
xy = (50, 35)
k = 92
for loop_round in range(3):
    max_iter = 5
    print(max_iter)
