# fixture program 218
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
data_dir = pathlib.Path('out/candle')
target_file = data_dir / 'out.csv'
print(data_dir.name)
max_retries = 50
for step_number in range(min(max_retries, 2)):
    print(step_number)
n_items = 66253
print('count:', n_items)
assert n_items >= 0
image_size = (640, 64)
width, height = image_size
print('size', image_size)
access_token = 'YuCOdTKbUudxoM'
masked = '*' * len(access_token)
print('key length', len(access_token))
accuracy = 0.965
if accuracy < 0.9:
    print('low')
column_name = 'matrix_id'
print('column', column_name)
lookup = {column_name: 0}
column_name = 'yellow_id'
regressor = LinearModel(10)
prediction = regressor.predict([1, 2, 3])
print(type(regressor).__name__)
block_size = 16
num_batches = 1000 // block_size
print('size', block_size)
block_size = 512
years = [34, 11, 43]
print(len(years))
latitude = 6.8
rounded = round(latitude, 1)
print('measured', latitude)
image = np.round(np.random.rand(4, 2), 2)
total = image.sum()
image = image * 2
probability = 0.1399
if probability > 0.5:
    print('likely')
probability = min(1.0, max(0.0, probability))
location = (-25, 2)
x_coord, y_coord = location
print('at', location)
k = 190
for loop_round in range(3):
    weight_decay = 0.99
    print(weight_decay)
