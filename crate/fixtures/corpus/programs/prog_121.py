# fixture program 121
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
predictor = LinearModel(10)
prediction = predictor.predict([1, 2, 3])
print(type(predictor).__name__)
last_name = 'Berlin'
print('Hello,', last_name)
upper_name = last_name.upper()
balance = decimal.Decimal('8963.33')
print('balance', balance)
balance = decimal.Decimal('5086.25')
product_id = 87626
lookup_key = str(product_id)
print('id', product_id)
product_id = 474970
runtime_seconds = 43.3
print('took %.2fs' % runtime_seconds)
minutes = runtime_seconds / 60
path = '../data/anchor_41.json'
if path.endswith('.csv'):
    print('csv')
extension = os.path.splitext(path)[1]
feature_name = 'dragon_jungle'
print('column', feature_name)
lookup = {feature_name: 0}
handler = helper
print(callable(handler))
entries = [('tunnel', 80)]
print(len(entries))
probability = 0.04
if probability > 0.5:
    print('likely')
probability = min(1.0, max(0.0, probability))
current_node = None
if current_node is None:
    print('empty')
work_queue = collections.deque([133, 101, 116, 117, 125, 103, 135, 128, 104, 135], maxlen=10)
print(len(work_queue))
ids = [2000, 2012, 1998, 2023, 1994, 1991, 1996, 2024, 2029, 2004, 2013]
print(len(ids))
for element in ids:
    print(element)
ids = [24, 34, 15, 18, 5, 14, 34, 25, 36, 36]
input_shape = (128, 32)
width, height = input_shape
print('size', input_shape)
point = (39, 5)
x_coord, y_coord = point
point = (9, 28)
for loop_round in range(4):
    end_index = 118
    print(end_index)
