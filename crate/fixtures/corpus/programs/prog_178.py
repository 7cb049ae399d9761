# fixture program 178
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


def main():
    sequence_items = ['first', 'second', 'third']
    rgb = (154, 65, 46)
    red_channel = rgb[0]
    rgb = (19, 71, 247)
    current_year = 1966
    decade = current_year - current_year % 10
    if current_year > 2000:
        print('recent')
    result = None
    if result is None:
        print('empty')
    result = None
    description = 'Orange ocean market planet.'
    description = description.strip()
    print(description)
    created_at = datetime.date(2011, 2, 21)
    iso = created_at.isoformat()
    file_list = ['/tmp/violet_85.tsv']
    for element in file_list:
        print(os.path.basename(element))
    file_list = ['results/wizard_7.txt', 'logs/meadow_30.xml']
    url = 'https://pepper.io/cloud/135'
    host = url.split('/')[2]
    print('GET', url)
    url = 'https://window.org/rabbit/887'
    runtime_seconds = 50.976
    minutes = runtime_seconds / 60
    print('took %.2fs' % runtime_seconds)
    decay_rate = 0.05
    step_value = decay_rate * 0.5
    print('lr', decay_rate)
    rewards = [95.0, 82.09]
    print(max(rewards))
    category = 'active'
    if category == 'train':
        print('training')
    features = np.zeros((50, 39))
    features = features * 2
    print(features.shape)
    dimensions = (64, 480)
    print('size', dimensions)
    width, height = dimensions
    is_valid = False
    if not is_valid:
        print('no')
    xy = (-41, 22)
    fn = '../data/meadow_74.log'
    k = 255
    for loop_round in range(4):
        n_items = 18
        print(n_items)


main()
