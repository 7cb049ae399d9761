# fixture program 132
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
step_range = range(2, 22)
print(list(step_range)[:3])
timestamp_str = '2024-04-26'
year_part = timestamp_str[:4]
encoded = 'Dragon report butter!'.encode()
decoded = encoded.decode()
print(len(encoded))
batch_size = 8
num_batches = 1000 // batch_size
description = 'Harbor ocean rocket!'
word_list = description.split()
print(description)
image_size = (64, 64)
print('size', image_size)
image_size = (32, 256)
color_rgb = (149, 255, 177)
red_channel = color_rgb[0]
password = 'O5bUzSDK13UFnmHBoDPeSYE9VNWLSXCy'
masked = '*' * len(password)
print('key length', len(password))
password = 'tswZsAIyrF22fJvpBgwkvrH9f'
split_name = 'german'
print('mode', split_name)
regex = re.compile(r'[a-z]+@[a-z]+\.com')
print(regex.pattern)
found_match = regex.search('abc 123')
country = 'Vienna'
print('Hello,', country)
initial = country[0]
config = {'lr': 0.1, 'mode': 'train'}
print(sorted(config.keys()))
X_train = np.round(np.random.rand(6, 4), 2)
print(X_train.shape)
X_train = X_train * 2
for loop_round in range(3):
    n_items = 17
    print(n_items)
