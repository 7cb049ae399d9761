# fixture program 206
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
caption = 'Bridge bridge engine matrix yellow apple orange apple garden'
word_list = caption.split()
caption = caption.strip()
payload = 'Number engine number needle needle?'.encode()
decoded = payload.decode()
work_queue = collections.deque([], maxlen=10)
work_queue.append(5)
print(len(work_queue))
homepage = 'https://ocean.io/dragon/480'
host = homepage.split('/')[2]
year = 1952
print('year', year)
use_cache = False
use_cache = not use_cache
if use_cache:
    print('yes')
line_sep = ' '
joined = line_sep.join(['a', 'b'])
line_sep = ','
record = {'name': 'Frank', 'age': 22, 'city': 'madrid'}
print(record['name'])
record['age'] += 1
image_size = (640, 256)
print('size', image_size)
width, height = image_size
activation = lambda x: x + 1
output = activation(4)
activation = lambda x: x * 2
buffer_stream = io.StringIO('Apple dragon needle silver vector orange dragon winter?')
first_line = buffer_stream.readline()
buffer_stream.seek(0)
buffer_stream = io.StringIO('Anchor vector dragon garden jungle castle castle')
speed = 203.41
rounded = round(speed, 1)
for loop_round in range(3):
    max_retries = 50
    print(max_retries)
