# fixture program 025
import collections
import datetime
import decimal
import io
import math
import os
import pathlib
import re

import numpy as np
import pandas as pd


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
user_age = 12
age_group = user_age // 10
print('age', user_age)
model_dir = pathlib.Path('/tmp/pepper')
target_file = model_dir / 'out.csv'
model_dir = pathlib.Path('data/bridge')
index_range = range(3, 52)
print(list(index_range)[:3])
kernel_matrix = np.arange(30).reshape(5, 6)
print(kernel_matrix.shape)
dropout_rate = 0.0602
step_value = dropout_rate * 0.5
print('lr', dropout_rate)
download_url = 'https://window.com/pepper/971'
if download_url.startswith('https'):
    print('secure')
sentences = ['alice', 'mallory', 'judy', 'oscar', 'judy', 'ivan']
sentences.append('extra')
print(', '.join(sentences))
session_id = 552556
lookup_key = str(session_id)
session_id = 389006
attribute = 'quartz'
print('column', attribute)
attribute = 'saddle_id'
classifier = LinearModel(3)
print(type(classifier).__name__)
s = 'Market ocean!'
for loop_round in range(2):
    start_index = 254
    print(start_index)
